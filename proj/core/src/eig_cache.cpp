#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "graphfb/error.hpp"
#include "graphfb/spectral.hpp"

namespace graphfb {

namespace {

constexpr std::string_view kMagic = "graphfb-eig v1\n";

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  }
  return v;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  v = to_little(v);
  char buf[8];
  std::memcpy(buf, &v, 8);
  out.write(buf, 8);
}

void put_f64(std::ostream& out, double d) { put_u64(out, std::bit_cast<std::uint64_t>(d)); }

std::uint64_t get_u64(std::istream& in) {
  char buf[8];
  if (!in.read(buf, 8)) throw Error(ErrorCode::ParseError, "truncated eigen cache");
  std::uint64_t v = 0;
  std::memcpy(&v, buf, 8);
  return to_little(v);
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace

std::uint64_t content_hash(const Matrix& l) {
  // FNV-1a over n and the row-major little-endian bytes of L.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t word) {
    word = to_little(word);
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(l.rows()));
  for (Index i = 0; i < l.rows(); ++i) {
    for (Index j = 0; j < l.cols(); ++j) mix(std::bit_cast<std::uint64_t>(l(i, j)));
  }
  return h;
}

void save_decomposition(const SpectralDecomposition& sd, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  const Index n = sd.n();
  put_u64(out, static_cast<std::uint64_t>(n));
  for (Index i = 0; i < n; ++i) put_f64(out, sd.eigenvalues(i));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) put_f64(out, sd.basis(i, j));
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

SpectralDecomposition load_decomposition(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::string magic(kMagic.size(), '\0');
  if (!in.read(magic.data(), static_cast<std::streamsize>(magic.size())) || magic != kMagic) {
    throw Error(ErrorCode::ParseError, "not a graphfb eigen cache: " + path.string());
  }
  const auto n = static_cast<Index>(get_u64(in));
  if (n <= 0 || n > (1 << 20)) throw Error(ErrorCode::ParseError, "implausible size in cache");
  SpectralDecomposition sd{Vector(n), Matrix(n, n)};
  for (Index i = 0; i < n; ++i) sd.eigenvalues(i) = get_f64(in);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) sd.basis(i, j) = get_f64(in);
  }
  return sd;
}

SpectralDecomposition eig_sym_cached(const Matrix& l, const std::filesystem::path& cache_dir) {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << content_hash(l) << ".eig";
  const auto path = cache_dir / name.str();
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    auto sd = load_decomposition(path);
    if (sd.n() == l.rows()) return sd;
  }
  auto sd = eig_sym(l);
  std::filesystem::create_directories(cache_dir, ec);
  if (!ec) save_decomposition(sd, path);
  return sd;
}

}  // namespace graphfb
