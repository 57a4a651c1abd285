#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/shd.hpp"

#ifndef SFH_CORPUS_DIR
#error "SFH_CORPUS_DIR must point at the corpus directory"
#endif

namespace sfh::testing {

struct CorpusEntry {
  std::string name;
  Diagram diagram;
};

inline std::vector<std::filesystem::path> corpus_paths() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(SFH_CORPUS_DIR))
    if (entry.path().extension() == ".shd") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& path : corpus_paths()) out.push_back({path.stem().string(), load_diagram(path)});
  return out;
}

inline Diagram corpus_diagram(const std::string& stem) {
  return load_diagram(std::filesystem::path(SFH_CORPUS_DIR) / (stem + ".shd"));
}

inline Generator gen(std::vector<int> points) {
  std::sort(points.begin(), points.end());
  return Generator{std::move(points)};
}

}  // namespace sfh::testing
