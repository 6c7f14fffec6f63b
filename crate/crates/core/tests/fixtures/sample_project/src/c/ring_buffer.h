#ifndef RING_BUFFER_H
#define RING_BUFFER_H

#include <stddef.h>
#include <stdbool.h>

struct ring_buffer {
    char *storage;
    size_t capacity;
    size_t read_pos;
    size_t write_pos;
    bool full;
};

void ring_buffer_init(struct ring_buffer *rb, char *storage, size_t capacity);
bool ring_buffer_push(struct ring_buffer *rb, char value);
bool ring_buffer_pop(struct ring_buffer *rb, char *out_value);
size_t ring_buffer_size(const struct ring_buffer *rb);
bool ring_buffer_empty(const struct ring_buffer *rb);

#endif
