#pragma once

#include <string>
#include <vector>

namespace bsc::cli {

struct Outcome {
  int status = 0;  // 0 positive verdict, 1 negative verdict, 2 usage or input error
  std::string out;
  std::string err;
};

// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace bsc::cli
