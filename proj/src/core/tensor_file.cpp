#include "nebi/core/tensor_file.hpp"

#include <cstdio>
#include <cstring>
#include <limits>
#include <memory>

namespace nebi::core {

namespace {

constexpr char kMagic[4] = {'N', 'E', 'B', 'I'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kDtypeF32 = 0;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void put_u64_le(unsigned char* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_u64_le(const unsigned char* in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return v;
}

std::uint64_t checked_element_count(std::span<const std::uint64_t> dims) {
  if (dims.empty())
    throw TensorIoError(TensorIoError::Code::BadDims, "tensor has no dims");
  std::uint64_t n = 1;
  for (std::uint64_t d : dims) {
    if (d == 0)
      throw TensorIoError(TensorIoError::Code::BadDims, "zero-sized dim");
    if (d > std::numeric_limits<std::uint64_t>::max() / n)
      throw TensorIoError(TensorIoError::Code::BadDims, "dims overflow u64");
    n *= d;
  }
  return n;
}

}  // namespace

std::uint64_t Tensor::element_count() const {
  return checked_element_count(dims);
}

void write_tensor(const std::filesystem::path& path,
                  std::span<const std::uint64_t> dims,
                  std::span<const float> data) {
  const std::uint64_t n = checked_element_count(dims);
  if (n != data.size())
    throw TensorIoError(TensorIoError::Code::BadDims,
                        "payload size does not match dims");
  if (dims.size() > 255)
    throw TensorIoError(TensorIoError::Code::BadDims, "ndim exceeds u8");

  FilePtr f(std::fopen(path.string().c_str(), "wb"));
  if (!f)
    throw TensorIoError(TensorIoError::Code::Io,
                        "cannot open for write: " + path.string());

  unsigned char header[7];
  std::memcpy(header, kMagic, 4);
  header[4] = kVersion;
  header[5] = kDtypeF32;
  header[6] = static_cast<unsigned char>(dims.size());
  if (std::fwrite(header, 1, sizeof header, f.get()) != sizeof header)
    throw TensorIoError(TensorIoError::Code::Io, "short header write");

  for (std::uint64_t d : dims) {
    unsigned char buf[8];
    put_u64_le(buf, d);
    if (std::fwrite(buf, 1, 8, f.get()) != 8)
      throw TensorIoError(TensorIoError::Code::Io, "short dim write");
  }

  // Scalars serialized as little-endian u32 bit patterns.
  std::vector<unsigned char> payload(data.size() * 4);
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::uint32_t bits;
    std::memcpy(&bits, &data[i], 4);
    payload[4 * i + 0] = static_cast<unsigned char>(bits);
    payload[4 * i + 1] = static_cast<unsigned char>(bits >> 8);
    payload[4 * i + 2] = static_cast<unsigned char>(bits >> 16);
    payload[4 * i + 3] = static_cast<unsigned char>(bits >> 24);
  }
  if (!payload.empty() &&
      std::fwrite(payload.data(), 1, payload.size(), f.get()) != payload.size())
    throw TensorIoError(TensorIoError::Code::Io, "short payload write");
  if (std::fflush(f.get()) != 0)
    throw TensorIoError(TensorIoError::Code::Io, "flush failed");
}

Tensor read_tensor(const std::filesystem::path& path) {
  FilePtr f(std::fopen(path.string().c_str(), "rb"));
  if (!f)
    throw TensorIoError(TensorIoError::Code::Io,
                        "cannot open for read: " + path.string());

  unsigned char header[7];
  if (std::fread(header, 1, sizeof header, f.get()) != sizeof header)
    throw TensorIoError(TensorIoError::Code::Truncated, "truncated header");
  if (std::memcmp(header, kMagic, 4) != 0)
    throw TensorIoError(TensorIoError::Code::BadMagic, "bad magic");
  if (header[4] != kVersion)
    throw TensorIoError(TensorIoError::Code::UnsupportedVersion,
                        "unsupported version " + std::to_string(header[4]));
  if (header[5] != kDtypeF32)
    throw TensorIoError(TensorIoError::Code::UnsupportedDtype,
                        "unsupported dtype " + std::to_string(header[5]));
  const int ndim = header[6];
  if (ndim == 0)
    throw TensorIoError(TensorIoError::Code::BadDims, "tensor has no dims");

  Tensor t;
  t.dims.resize(ndim);
  for (int i = 0; i < ndim; ++i) {
    unsigned char buf[8];
    if (std::fread(buf, 1, 8, f.get()) != 8)
      throw TensorIoError(TensorIoError::Code::Truncated, "truncated dims");
    t.dims[i] = get_u64_le(buf);
  }
  const std::uint64_t n = checked_element_count(t.dims);
  if (n > std::numeric_limits<std::size_t>::max() / 4)
    throw TensorIoError(TensorIoError::Code::BadDims, "tensor too large");

  std::vector<unsigned char> payload(static_cast<std::size_t>(n) * 4);
  if (std::fread(payload.data(), 1, payload.size(), f.get()) != payload.size())
    throw TensorIoError(TensorIoError::Code::Truncated, "truncated payload");

  t.data.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < t.data.size(); ++i) {
    std::uint32_t bits = static_cast<std::uint32_t>(payload[4 * i]) |
                         static_cast<std::uint32_t>(payload[4 * i + 1]) << 8 |
                         static_cast<std::uint32_t>(payload[4 * i + 2]) << 16 |
                         static_cast<std::uint32_t>(payload[4 * i + 3]) << 24;
    std::memcpy(&t.data[i], &bits, 4);
  }
  return t;
}

}  // namespace nebi::core
