#include <math.h>
#include "vec_math.h"

static const float EPSILON_VALUE = 1e-6f;

vec2 vec2_add(vec2 a, vec2 b)
{
    vec2 sum = { a.x + b.x, a.y + b.y };
    return sum;
}

vec2 vec2_scale(vec2 v, float factor)
{
    vec2 scaled = { v.x * factor, v.y * factor };
    return scaled;
}

float vec2_dot(vec2 a, vec2 b)
{
    return a.x * b.x + a.y * b.y;
}

float vec2_length(vec2 v)
{
    return sqrtf(vec2_dot(v, v));
}

vec3 vec3_cross(vec3 lhs, vec3 rhs)
{
    vec3 result;
    result.x = lhs.y * rhs.z - lhs.z * rhs.y;
    result.y = lhs.z * rhs.x - lhs.x * rhs.z;
    result.z = lhs.x * rhs.y - lhs.y * rhs.x;
    return result;
}

int vec3_is_zero(vec3 v)
{
    return fabsf(v.x) < EPSILON_VALUE && fabsf(v.y) < EPSILON_VALUE && fabsf(v.z) < EPSILON_VALUE;
}

vec3 vec3_normalize(vec3 v)
{
    float inv_len;
    float len_sq = v.x * v.x + v.y * v.y + v.z * v.z;
    if (len_sq < EPSILON_VALUE)
        return v;
    inv_len = 1.0f / sqrtf(len_sq);
    v.x *= inv_len;
    v.y *= inv_len;
    v.z *= inv_len;
    return v;
}
