// writes every catalog group as a Cayley-table fixture: <NN>_<name>.cayley
#include <cstdio>
#include <filesystem>
#include <string>

#include "wedderkit/constructions.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output-directory>\n", argv[0]);
    return 1;
  }
  namespace fs = std::filesystem;
  fs::create_directories(argv[1]);
  for (const auto& entry : wedderkit::small_group_catalog()) {
    char prefix[8];
    std::snprintf(prefix, sizeof(prefix), "%02d", entry.group->order());
    fs::path file = fs::path(argv[1]) / (std::string(prefix) + "_" + entry.name + ".cayley");
    wedderkit::write_cayley_table(entry.group, file.string());
    std::printf("%s\n", file.string().c_str());
  }
  return 0;
}
