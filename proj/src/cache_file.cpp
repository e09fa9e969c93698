#include "signclass/cache_file.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <functional>
#include <iterator>

#include "signclass/text_io.hpp"

namespace signclass {

namespace {

constexpr std::array<char, 8> kMagic = {'S', 'G', 'N', 'C', 'L', 'A', 'S', 'S'};

template <class T>
void put(std::ostream& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

template <class T>
T get(std::istream& in) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw CacheFormatError("truncated cache file");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return static_cast<T>(v);
}

void put_partition(std::ostream& out, const Partition& p) {
  put<std::uint32_t>(out, static_cast<std::uint32_t>(p.length()));
  for (auto v : p) put<std::uint64_t>(out, static_cast<std::uint64_t>(v));
}

Partition get_partition(std::istream& in) {
  const auto len = get<std::uint32_t>(in);
  std::vector<Part> parts;
  for (std::uint32_t i = 0; i < len; ++i) parts.push_back(static_cast<Part>(get<std::uint64_t>(in)));
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()) ||
      std::any_of(parts.begin(), parts.end(), [](Part v) { return v < 1; })) {
    throw CacheFormatError("cache file holds an invalid partition");
  }
  return Partition::from_sorted(std::move(parts));
}

void put_bigint(std::ostream& out, const BigInt& v) {
  std::vector<unsigned char> bytes;
  boost::multiprecision::export_bits(BigInt(boost::multiprecision::abs(v)), std::back_inserter(bytes), 8);
  out.put(v < 0 ? 1 : 0);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(bytes.size()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

BigInt get_bigint(std::istream& in) {
  const int sign = in.get();
  if (sign != 0 && sign != 1) throw CacheFormatError("bad sign byte in cache file");
  const auto len = get<std::uint32_t>(in);
  std::vector<unsigned char> bytes(len);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(len));
  if (!in) throw CacheFormatError("truncated cache file");
  BigInt v;
  boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8);
  return sign == 1 ? BigInt(-v) : v;
}

}  // namespace

void write_cache_batch(std::ostream& out, CacheBatch batch) {
  std::sort(batch.records.begin(), batch.records.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kCacheFormatVersion);
  put<std::uint64_t>(out, static_cast<std::uint64_t>(batch.n));
  put_partition(out, batch.gamma);
  put<std::uint64_t>(out, batch.records.size());
  for (const auto& [lambda, value] : batch.records) {
    put_partition(out, lambda);
    put_bigint(out, value);
  }
}

CacheBatch read_cache_batch(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw CacheFormatError("not a signclass cache file");
  const auto version = get<std::uint32_t>(in);
  if (version != kCacheFormatVersion) {
    throw CacheVersionError("cache format version " + std::to_string(version) + ", expected " +
                            std::to_string(kCacheFormatVersion));
  }
  CacheBatch batch;
  batch.n = static_cast<Part>(get<std::uint64_t>(in));
  batch.gamma = get_partition(in);
  if (batch.gamma.size() != batch.n) throw CacheFormatError("cache header size mismatch");
  const auto count = get<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto lambda = get_partition(in);
    if (lambda.size() != batch.n) throw CacheFormatError("cache record size mismatch");
    batch.records.emplace_back(std::move(lambda), get_bigint(in));
  }
  return batch;
}

std::filesystem::path cache_batch_path(const std::filesystem::path& dir, const Partition& gamma) {
  return dir / "sn" / ("n" + std::to_string(gamma.size())) / (to_string(gamma) + ".bin");
}

void save_cache_batch(const std::filesystem::path& file, CacheBatch batch) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write_cache_batch(out, std::move(batch));
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<CacheBatch> load_cache_batch(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  return read_cache_batch(in);
}

}  // namespace signclass
