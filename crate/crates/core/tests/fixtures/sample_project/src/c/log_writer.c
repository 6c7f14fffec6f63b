#include <stdio.h>
#include <stdarg.h>
#include <time.h>

enum log_level { LOG_DEBUG, LOG_INFO, LOG_WARN, LOG_ERROR };

static FILE *log_stream;
static enum log_level min_level = LOG_INFO;
static int use_timestamps = 1;

static const char *level_names[] = { "debug", "info", "warn", "error" };

void log_open(const char *file_name)
{
    log_stream = fopen(file_name, "a");
}

void log_set_level(enum log_level level)
{
    min_level = level;
}

static void write_timestamp(FILE *out)
{
    time_t now = time(NULL);
    struct tm *local_time = localtime(&now);
    char stamp[32];
    strftime(stamp, sizeof stamp, "%Y-%m-%d %H:%M:%S", local_time);
    fprintf(out, "%s ", stamp);
}

void log_message(enum log_level level, const char *fmt, ...)
{
    va_list args;
    FILE *target = log_stream ? log_stream : stderr;
    if (level < min_level)
        return;
    if (use_timestamps)
        write_timestamp(target);
    fprintf(target, "[%s] ", level_names[level]);
    va_start(args, fmt);
    vfprintf(target, fmt, args);
    va_end(args);
    fputc('\n', target);
}

void log_close(void)
{
    if (log_stream)
        fclose(log_stream);
    log_stream = NULL;
}
