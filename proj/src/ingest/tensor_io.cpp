#include "trajlab/ingest/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <string>

#include "trajlab/errors.hpp"

// Payload bytes are defined little-endian; this implementation memcpy's
// native representations and is only built for little-endian hosts.
static_assert(std::endian::native == std::endian::little,
              "tensor file writer assumes a little-endian host");

namespace trajlab::ingest {

namespace {

constexpr char kMagic[8] = {'T', 'R', 'J', 'L', '0', '0', '0', '1'};

std::size_t element_count(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (std::size_t d : dims) n *= d;
    return n;
}

void append_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
    }
}

std::uint64_t parse_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    }
    return v;
}

}  // namespace

std::uint64_t fnv1a64(const unsigned char* data, std::size_t len) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (std::size_t i = 0; i < len; ++i) {
        hash ^= data[i];
        hash *= 1099511628211ULL;
    }
    return hash;
}

TensorData TensorData::from_matrix(const numcore::Matrix& m, TensorDtype dtype) {
    TensorData t;
    t.dtype = dtype;
    t.dims = {m.rows(), m.cols()};
    t.values.assign(m.values().begin(), m.values().end());
    return t;
}

TensorData TensorData::from_tensor3(const numcore::Tensor3& src, TensorDtype dtype) {
    TensorData t;
    t.dtype = dtype;
    t.dims = {src.dim0(), src.dim1(), src.dim2()};
    t.values.assign(src.values().begin(), src.values().end());
    return t;
}

numcore::Matrix TensorData::to_matrix() const {
    if (dims.size() != 2) {
        throw DimMismatch("tensor has " + std::to_string(dims.size()) +
                          " axes, expected a matrix");
    }
    return numcore::Matrix(dims[0], dims[1], values);
}

numcore::Tensor3 TensorData::to_tensor3() const {
    if (dims.size() != 3) {
        throw DimMismatch("tensor has " + std::to_string(dims.size()) +
                          " axes, expected 3");
    }
    return numcore::Tensor3(dims[0], dims[1], dims[2], values);
}

void write_tensor(const std::filesystem::path& path, const TensorData& tensor) {
    if (tensor.dims.size() != 2 && tensor.dims.size() != 3) {
        throw InvalidConfig("write_tensor: ndim must be 2 or 3");
    }
    if (tensor.values.size() != element_count(tensor.dims)) {
        throw DimMismatch("write_tensor: value count does not match dims");
    }

    std::vector<unsigned char> payload;
    if (tensor.dtype == TensorDtype::f32) {
        payload.resize(tensor.values.size() * sizeof(float));
        for (std::size_t i = 0; i < tensor.values.size(); ++i) {
            const float f = static_cast<float>(tensor.values[i]);
            std::memcpy(payload.data() + i * sizeof(float), &f, sizeof(float));
        }
    } else {
        payload.resize(tensor.values.size() * sizeof(double));
        std::memcpy(payload.data(), tensor.values.data(), payload.size());
    }

    std::vector<unsigned char> header;
    header.insert(header.end(), kMagic, kMagic + 8);
    header.push_back(static_cast<unsigned char>(tensor.dtype));
    header.push_back(static_cast<unsigned char>(tensor.dims.size()));
    for (std::size_t d : tensor.dims) append_u64(header, d);

    std::vector<unsigned char> footer;
    append_u64(footer, fnv1a64(payload.data(), payload.size()));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw WriteFailure("cannot open '" + path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(header.data()),
              static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    out.write(reinterpret_cast<const char*>(footer.data()),
              static_cast<std::streamsize>(footer.size()));
    if (!out) {
        throw WriteFailure("short write to '" + path.string() + "'");
    }
}

TensorData read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFile("cannot open '" + path.string() + "'");
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
        if (bytes.size() - pos < count) {
            throw TruncatedFile("'" + path.string() + "' ends inside a field");
        }
    };

    need(10);
    if (std::memcmp(bytes.data(), kMagic, 8) != 0) {
        throw BadMagic("'" + path.string() + "' is not a tensor file");
    }
    pos = 8;
    const unsigned char dtype_tag = bytes[pos++];
    const unsigned char ndim = bytes[pos++];
    if (dtype_tag > 1) {
        throw BadMagic("unknown dtype tag " + std::to_string(dtype_tag));
    }
    if (ndim != 2 && ndim != 3) {
        throw BadMagic("unsupported ndim " + std::to_string(ndim));
    }

    TensorData tensor;
    tensor.dtype = static_cast<TensorDtype>(dtype_tag);
    tensor.dims.resize(ndim);
    for (auto& d : tensor.dims) {
        need(8);
        d = parse_u64(bytes.data() + pos);
        pos += 8;
    }

    const std::size_t count = element_count(tensor.dims);
    const std::size_t elem_size =
        tensor.dtype == TensorDtype::f32 ? sizeof(float) : sizeof(double);
    need(count * elem_size + 8);
    const unsigned char* payload = bytes.data() + pos;
    const std::size_t payload_len = count * elem_size;
    pos += payload_len;

    const std::uint64_t stored = parse_u64(bytes.data() + pos);
    pos += 8;
    if (pos != bytes.size()) {
        throw TruncatedFile("'" + path.string() + "' has trailing bytes");
    }
    if (fnv1a64(payload, payload_len) != stored) {
        throw ChecksumMismatch("payload checksum mismatch in '" + path.string() + "'");
    }

    tensor.values.resize(count);
    if (tensor.dtype == TensorDtype::f32) {
        for (std::size_t i = 0; i < count; ++i) {
            float f;
            std::memcpy(&f, payload + i * sizeof(float), sizeof(float));
            tensor.values[i] = static_cast<double>(f);
        }
    } else {
        std::memcpy(tensor.values.data(), payload, payload_len);
    }
    return tensor;
}

}  // namespace trajlab::ingest
