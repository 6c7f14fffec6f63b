#include <stdint.h>
#include <stddef.h>
#include <stdbool.h>
#include <string.h>

#define MAX_PEERS 32

struct peer_info {
    uint32_t ipv4_addr;
    uint16_t udp_port;
    uint64_t last_seen_at;
    bool is_connected;
    unsigned retries_before_drop;
};

static struct peer_info known_peers[MAX_PEERS];
static size_t num_known_peers;
static uint8_t send_and_recv_buf[1500];
static bool has_been_initialized;
static unsigned packets_sent_total;

int net_init(void)
{
    memset(known_peers, 0, sizeof known_peers);
    num_known_peers = 0;
    has_been_initialized = true;
    return 0;
}

static size_t encode_header_into(uint8_t *dst, uint16_t msg_type, uint16_t payload_len)
{
    dst[0] = (uint8_t)(msg_type >> 8);
    dst[1] = (uint8_t)msg_type;
    dst[2] = (uint8_t)(payload_len >> 8);
    dst[3] = (uint8_t)payload_len;
    return 4;
}

int send_packet_to_all_peers(const uint8_t *payload, uint16_t payload_len)
{
    size_t p;
    int sent_count = 0;
    size_t hdr_len = encode_header_into(send_and_recv_buf, 1, payload_len);
    memcpy(send_and_recv_buf + hdr_len, payload, payload_len);
    for (p = 0; p < num_known_peers; p++) {
        if (known_peers[p].is_connected) {
            sent_count++;
            packets_sent_total++;
        }
    }
    return sent_count;
}

bool peer_is_stale(const struct peer_info *peer, uint64_t now_ms, uint64_t timeout_ms)
{
    return now_ms - peer->last_seen_at > timeout_ms;
}

void drop_stale_peers_or_retry(uint64_t now_ms)
{
    size_t p;
    for (p = 0; p < num_known_peers; p++) {
        struct peer_info *peer = &known_peers[p];
        if (peer_is_stale(peer, now_ms, 5000)) {
            if (peer->retries_before_drop == 0)
                peer->is_connected = false;
            else
                peer->retries_before_drop--;
        }
    }
}

uint16_t read_u16_from_wire(const uint8_t *src)
{
    return (uint16_t)((src[0] << 8) | src[1]);
}

uint32_t ip_from_4_octets(uint8_t a, uint8_t b, uint8_t c, uint8_t d)
{
    return ((uint32_t)a << 24) | ((uint32_t)b << 16) | ((uint32_t)c << 8) | d;
}
