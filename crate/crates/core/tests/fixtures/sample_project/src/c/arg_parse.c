#include <string.h>
#include <stdlib.h>
#include <stdbool.h>

struct cli_options {
    const char *input_path;
    const char *output_path;
    int thread_count;
    bool verbose;
    bool show_help;
    char **extra_args;
    int extra_arg_count;
};

static bool starts_with(const char *s, const char *prefix)
{
    return strncmp(s, prefix, strlen(prefix)) == 0;
}

int parse_arguments(int argc, char **argv, struct cli_options *opts)
{
    int arg_index;
    memset(opts, 0, sizeof *opts);
    opts->thread_count = 1;
    opts->extra_args = malloc(sizeof(char *) * (size_t)argc);
    for (arg_index = 1; arg_index < argc; arg_index++) {
        const char *current_arg = argv[arg_index];
        if (strcmp(current_arg, "-v") == 0) {
            opts->verbose = true;
        } else if (strcmp(current_arg, "-h") == 0) {
            opts->show_help = true;
        } else if (starts_with(current_arg, "--threads=")) {
            opts->thread_count = atoi(current_arg + 10);
        } else if (strcmp(current_arg, "-o") == 0 && arg_index + 1 < argc) {
            opts->output_path = argv[++arg_index];
        } else if (!opts->input_path) {
            opts->input_path = current_arg;
        } else {
            opts->extra_args[opts->extra_arg_count++] = argv[arg_index];
        }
    }
    return opts->input_path ? 0 : -1;
}
