#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::ingest {

enum class TensorDtype : std::uint8_t { f32 = 0, f64 = 1 };

/// In-memory image of one tensor file. Values are held as doubles; writing
/// with dtype f32 narrows each value, so a bit-exact f32 round trip requires
/// values already representable in single precision.
struct TensorData {
    TensorDtype dtype = TensorDtype::f64;
    std::vector<std::size_t> dims;  // 2 or 3 axes
    std::vector<double> values;     // row-major

    static TensorData from_matrix(const numcore::Matrix& m,
                                  TensorDtype dtype = TensorDtype::f64);
    static TensorData from_tensor3(const numcore::Tensor3& t,
                                   TensorDtype dtype = TensorDtype::f64);
    numcore::Matrix to_matrix() const;
    numcore::Tensor3 to_tensor3() const;
};

/// Binary layout (all integers little-endian):
///   bytes 0..7   magic "TRJL0001"
///   byte  8      dtype tag (0 = f32, 1 = f64)
///   byte  9      ndim (2 or 3)
///   next         ndim x u64 axis lengths
///   payload      product(dims) values, row-major, little-endian
///   footer       u64 FNV-1a of the payload bytes
void write_tensor(const std::filesystem::path& path, const TensorData& tensor);
TensorData read_tensor(const std::filesystem::path& path);

/// 64-bit FNV-1a (offset basis 14695981039346656037, prime 1099511628211).
std::uint64_t fnv1a64(const unsigned char* data, std::size_t len);

}  // namespace trajlab::ingest
