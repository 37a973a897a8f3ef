#ifndef POLYHOPF_ENSEMBLE_IO_HPP
#define POLYHOPF_ENSEMBLE_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyhopf/polygon.hpp"

namespace polyhopf {

/// {"algebra": "R|C|H|O", "k", "n", "seed", "polygons": [[[f64 x n] x k]]}.
/// Floats carry 17 significant digits so the files round-trip exactly.
struct PolygonEnsemble {
  Algebra algebra;
  int k;
  std::uint64_t seed;
  std::vector<PolygonConfig> polygons;

  int n() const { return euclidean_dim(algebra); }
};

/// Frames serialize analogously: each column is a pair of coefficient arrays.
struct FrameEnsemble {
  Algebra algebra;
  int k;
  std::uint64_t seed;
  std::vector<StiefelFrame> frames;
};

std::string to_json(const PolygonEnsemble& e);
std::string to_json(const FrameEnsemble& e);

PolygonEnsemble polygon_ensemble_from_json(const std::string& text);
FrameEnsemble frame_ensemble_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace polyhopf

#endif  // POLYHOPF_ENSEMBLE_IO_HPP
