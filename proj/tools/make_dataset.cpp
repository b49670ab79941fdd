// Regenerates the embedded data file from first principles and writes it to
// the given path (default: the compiled-in location).

#include <cstdio>
#include <exception>
#include <string>

#include "dataset.hpp"

int main(int argc, char** argv) {
  std::string path;
  long qterms = 600;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--qterms" && i + 1 < argc) {
      qterms = std::stol(argv[++i]);
    } else if (path.empty()) {
      path = arg;
    } else {
      std::fprintf(stderr, "usage: make_dataset [--qterms T] [output-path]\n");
      return 3;
    }
  }
#ifdef M24_DEFAULT_DATA_PATH
  if (path.empty()) path = M24_DEFAULT_DATA_PATH;
#endif
  try {
    m24::Dataset ds = m24::build_dataset(qterms);
    m24::save_dataset(ds, path);
    std::printf("wrote %s (qterms=%ld)\n", path.c_str(), qterms);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
