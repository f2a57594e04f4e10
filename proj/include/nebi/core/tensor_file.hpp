#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nebi::core {

// Binary tensor container, little-endian throughout:
//   magic "NEBI" | version u8 = 1 | dtype u8 (0 = f32) | ndim u8
//   | ndim x u64 dims | row-major f32 payload.
// Round-trips are bit-exact, including signed zeros and subnormals.
struct Tensor {
  std::vector<std::uint64_t> dims;
  std::vector<float> data;

  std::uint64_t element_count() const;
};

class TensorIoError : public std::runtime_error {
 public:
  enum class Code {
    Io,
    BadMagic,
    UnsupportedVersion,
    UnsupportedDtype,
    BadDims,
    Truncated,
  };

  TensorIoError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

void write_tensor(const std::filesystem::path& path,
                  std::span<const std::uint64_t> dims,
                  std::span<const float> data);

Tensor read_tensor(const std::filesystem::path& path);

}  // namespace nebi::core
