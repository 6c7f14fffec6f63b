#include <stdlib.h>
#include <string.h>
#include "tile_map.h"

static int g_map_count = 0;

tile_map_t *tile_map_create(int width, int height)
{
    tile_map_t *map = malloc(sizeof(tile_map_t));
    size_t total_cells = (size_t)width * (size_t)height;
    map->tiles = calloc(total_cells, sizeof(tile_t));
    map->tile_count = total_cells;
    map->row_length = (size_t)width;
    map->map_width = width;
    map->map_height = height;
    map->dirty = false;
    g_map_count++;
    return map;
}

void tile_map_destroy(tile_map_t *map)
{
    size_t idx;
    for (idx = 0; idx < map->tile_count; idx++) {
        free(map->tiles[idx].pixel_data);
    }
    free(map->tiles);
    free(map);
    g_map_count--;
}

bool tile_map_contains(const tile_map_t *map, int x, int y)
{
    bool inside_x = x >= 0 && x < map->map_width;
    bool inside_y = y >= 0 && y < map->map_height;
    return inside_x && inside_y;
}

tile_t *tile_map_get(tile_map_t *map, int x, int y)
{
    size_t offset;
    if (!tile_map_contains(map, x, y))
        return NULL;
    offset = (size_t)y * map->row_length + (size_t)x;
    return &map->tiles[offset];
}

void tile_map_fill(tile_map_t *map, int tile_id)
{
    size_t i;
    for (i = 0; i < map->tile_count; i++)
        map->tiles[i].tile_id = tile_id;
    map->dirty = true;
}

size_t tile_map_visible_tiles(const tile_map_t *map, tile_t **out_tiles, size_t max_tiles)
{
    size_t found = 0;
    size_t cursor;
    for (cursor = 0; cursor < map->tile_count && found < max_tiles; cursor++) {
        if (map->tiles[cursor].is_visible)
            out_tiles[found++] = &map->tiles[cursor];
    }
    return found;
}
