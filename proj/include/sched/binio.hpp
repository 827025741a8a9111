#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

// Raw little-endian binary I/O for training-state snapshots. Exact by
// construction: doubles round-trip bit for bit.
namespace sched::io {

template <typename T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("truncated binary state");
  return v;
}

template <typename T>
void read_pod(std::istream& is, T& v) {
  v = read_pod<T>(is);
}

inline void write_mat(std::ostream& os, const Eigen::MatrixXd& m) {
  write_pod<std::int64_t>(os, m.rows());
  write_pod<std::int64_t>(os, m.cols());
  os.write(reinterpret_cast<const char*>(m.data()),
           static_cast<std::streamsize>(sizeof(double) * m.size()));
}

inline Eigen::MatrixXd read_mat(std::istream& is) {
  const auto rows = read_pod<std::int64_t>(is);
  const auto cols = read_pod<std::int64_t>(is);
  Eigen::MatrixXd m(rows, cols);
  is.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(double) * m.size()));
  if (!is) throw std::runtime_error("truncated binary state");
  return m;
}

inline void write_vec(std::ostream& os, const Eigen::VectorXd& v) {
  write_pod<std::int64_t>(os, v.size());
  os.write(reinterpret_cast<const char*>(v.data()),
           static_cast<std::streamsize>(sizeof(double) * v.size()));
}

inline Eigen::VectorXd read_vec(std::istream& is) {
  const auto n = read_pod<std::int64_t>(is);
  Eigen::VectorXd v(n);
  is.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(sizeof(double) * v.size()));
  if (!is) throw std::runtime_error("truncated binary state");
  return v;
}

inline void read_mat(std::istream& is, Eigen::MatrixXd& m) { m = read_mat(is); }
inline void read_vec(std::istream& is, Eigen::VectorXd& v) { v = read_vec(is); }

inline void write_string(std::ostream& os, const std::string& s) {
  write_pod<std::uint64_t>(os, s.size());
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream& is) {
  const auto n = read_pod<std::uint64_t>(is);
  std::string s(n, '\0');
  is.read(s.data(), static_cast<std::streamsize>(n));
  if (!is) throw std::runtime_error("truncated binary state");
  return s;
}

}  // namespace sched::io
