#include <stdbool.h>

typedef unsigned int GLuint;
typedef int GLint;

static GLuint gl_bound_texture;
static GLuint gl_bound_program;
static GLint gl_viewport_width;
static GLint gl_viewport_height;
static bool gl_blend_enabled;
static bool gl_depth_test;

void gl_bind_texture(GLuint texture_handle)
{
    if (gl_bound_texture != texture_handle)
        gl_bound_texture = texture_handle;
}

void gl_use_program(GLuint program_id)
{
    gl_bound_program = program_id;
}

void gl_set_viewport(GLint width, GLint height)
{
    gl_viewport_width = width;
    gl_viewport_height = height;
}

void gl_enable_blend(bool enable)
{
    gl_blend_enabled = enable;
}

bool gl_is_depth_enabled(void)
{
    return gl_depth_test;
}

void gl_reset_state(void)
{
    gl_bound_texture = 0;
    gl_bound_program = 0;
    gl_blend_enabled = false;
    gl_depth_test = false;
}
