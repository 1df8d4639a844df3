#include "seqlab/checkpoint.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

constexpr char kMagic[4] = {'S', 'Q', 'L', 'B'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

void write_residue_checkpoint(const std::string& path, const ResidueTable& table) {
  const std::uint64_t n = table.limit();
  std::vector<std::uint8_t> payload;
  if (table.narrow()) {
    payload.assign(table.narrow_data().begin() + 1, table.narrow_data().end());
  } else {
    payload.reserve(2 * n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      const std::uint16_t v = static_cast<std::uint16_t>(table[k]);
      payload.push_back(static_cast<std::uint8_t>(v & 0xff));
      payload.push_back(static_cast<std::uint8_t>(v >> 8));
    }
  }
  std::vector<std::uint8_t> head;
  head.insert(head.end(), kMagic, kMagic + 4);
  put_u32(head, kCheckpointVersion);
  put_u32(head, table.modulus().value());
  put_u64(head, n);
  std::vector<std::uint8_t> tail;
  put_u64(tail, fnv1a(payload));

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::invalid_argument, "cannot write checkpoint: " + path);
    out.write(reinterpret_cast<const char*>(head.data()), static_cast<std::streamsize>(head.size()));
    out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    out.write(reinterpret_cast<const char*>(tail.data()), static_cast<std::streamsize>(tail.size()));
    if (!out) fail(ErrorCode::invalid_argument, "short write on checkpoint: " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(ErrorCode::invalid_argument, "cannot move checkpoint into place: " + path);
}

ResidueTable read_residue_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::invalid_argument, "cannot read checkpoint: " + path);
  std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
  if (raw.size() < 28 || std::memcmp(raw.data(), kMagic, 4) != 0)
    fail(ErrorCode::invalid_argument, "not a residue checkpoint: " + path);
  const std::uint32_t version = get_u32(raw.data() + 4);
  if (version != kCheckpointVersion)
    fail(ErrorCode::invalid_argument,
         "unsupported checkpoint version " + std::to_string(version));
  const std::uint32_t m = get_u32(raw.data() + 8);
  const std::uint64_t n = get_u64(raw.data() + 12);
  const Modulus mod = Modulus::of(m);
  const std::uint64_t payload_bytes = mod.narrow() ? n : 2 * n;
  if (raw.size() != 20 + payload_bytes + 8)
    fail(ErrorCode::invalid_argument, "truncated checkpoint: " + path);
  const std::uint8_t* payload = raw.data() + 20;
  const std::uint64_t want = get_u64(payload + payload_bytes);
  const std::uint64_t got = fnv1a({payload, payload_bytes});
  if (want != got)
    fail(ErrorCode::invalid_argument, "checkpoint checksum mismatch: " + path);

  if (mod.narrow()) {
    std::vector<std::uint8_t> prefix(payload, payload + n);
    return ResidueTable::adopt(mod, std::move(prefix));
  }
  std::vector<std::uint16_t> prefix(n);
  for (std::uint64_t k = 0; k < n; ++k)
    prefix[k] = static_cast<std::uint16_t>(payload[2 * k] |
                                           (static_cast<std::uint16_t>(payload[2 * k + 1]) << 8));
  return ResidueTable::adopt(mod, std::move(prefix));
}

}  // namespace seqlab
