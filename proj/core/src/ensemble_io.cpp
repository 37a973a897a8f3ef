#include "polyhopf/ensemble_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace polyhopf {

namespace {

// Fixed %.17g rendering keeps output byte-identical across runs and platforms
// and round-trips every finite double.
void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_vector(std::string& out, std::span<const double> v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    append_double(out, v[i]);
  }
  out += ']';
}

void append_header(std::string& out, Algebra a, int k, std::uint64_t seed) {
  out += "{\"algebra\":\"";
  out += algebra_letter(a);
  out += "\",\"k\":" + std::to_string(k);
  out += ",\"n\":" + std::to_string(euclidean_dim(a));
  out += ",\"seed\":" + std::to_string(seed);
}

Algebra parse_algebra(const nlohmann::json& j) {
  const std::string s = j.at("algebra").get<std::string>();
  if (s.size() != 1) throw std::invalid_argument("bad algebra tag: " + s);
  return algebra_from_letter(s[0]);
}

}  // namespace

std::string to_json(const PolygonEnsemble& e) {
  std::string out;
  append_header(out, e.algebra, e.k, e.seed);
  out += ",\"polygons\":[";
  for (std::size_t p = 0; p < e.polygons.size(); ++p) {
    if (p) out += ',';
    const PolygonConfig& poly = e.polygons[p];
    out += '[';
    for (int i = 0; i < poly.k(); ++i) {
      if (i) out += ',';
      append_vector(out, poly.edge(i));
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

std::string to_json(const FrameEnsemble& e) {
  std::string out;
  append_header(out, e.algebra, e.k, e.seed);
  out += ",\"frames\":[";
  for (std::size_t f = 0; f < e.frames.size(); ++f) {
    if (f) out += ',';
    const StiefelFrame& frame = e.frames[f];
    out += '[';
    for (int i = 0; i < frame.k(); ++i) {
      if (i) out += ',';
      out += '[';
      append_vector(out, frame.column(i).x.coeffs());
      out += ',';
      append_vector(out, frame.column(i).y.coeffs());
      out += ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

PolygonEnsemble polygon_ensemble_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  PolygonEnsemble e{parse_algebra(j), j.at("k").get<int>(),
                    j.at("seed").get<std::uint64_t>(), {}};
  const int n = euclidean_dim(e.algebra);
  if (j.at("n").get<int>() != n)
    throw std::invalid_argument("ensemble n field inconsistent with algebra");
  for (const auto& jp : j.at("polygons")) {
    std::vector<std::vector<double>> edges;
    for (const auto& je : jp) edges.push_back(je.get<std::vector<double>>());
    e.polygons.emplace_back(n, std::move(edges));
  }
  return e;
}

FrameEnsemble frame_ensemble_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  FrameEnsemble e{parse_algebra(j), j.at("k").get<int>(),
                  j.at("seed").get<std::uint64_t>(), {}};
  for (const auto& jf : j.at("frames")) {
    std::vector<Spinor> cols;
    for (const auto& jc : jf) {
      const auto xs = jc.at(0).get<std::vector<double>>();
      const auto ys = jc.at(1).get<std::vector<double>>();
      cols.emplace_back(AlgebraElement(e.algebra, xs), AlgebraElement(e.algebra, ys));
    }
    e.frames.emplace_back(e.algebra, std::move(cols));
  }
  return e;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace polyhopf
