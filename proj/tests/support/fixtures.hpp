#pragma once

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <unistd.h>

#include "fqnres/knowledge_base.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return FQNRES_FIXTURE_DIR; }

inline std::string path(const std::string& name) { return (dir() / name).string(); }

inline std::string read(const std::string& name) {
  std::ifstream f(dir() / name, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

inline const fqnres::DependencyCoordinate kJdk{"jdk", "java8", "8"};
inline const fqnres::DependencyCoordinate kPatterns{"org.example", "patterns", "1.2"};

/// JDK listing plus the single-type distractor library.
inline fqnres::kb::KnowledgeBase walkthrough_kb() {
  fqnres::kb::KnowledgeBase kb;
  kb.ingest_class_listing(dir() / "jdk8.classes", kJdk);
  kb.ingest_class_listing(dir() / "patterns.classes", kPatterns);
  return kb;
}

/// Fresh path under the temp directory, removed on destruction.
class TempPath {
 public:
  explicit TempPath(const std::string& stem) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("fqnres_" + stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  }
  ~TempPath() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempPath(const TempPath&) = delete;
  TempPath& operator=(const TempPath&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures
