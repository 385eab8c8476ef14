#pragma once

#include <string>
#include <vector>

namespace rankone::cli {

// source: "published" (value printed in the literature), "derived" (computed by an
// independent route here), "trivial".
struct VerifyOutcome {
  std::string check_id;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string source;
};

// examples | table1 | table2 | lens | pform | all ("theorem44" is accepted for lens).
std::vector<VerifyOutcome> verify_suite(const std::string& name, unsigned threads = 0);

const std::vector<std::string>& suite_names();

}  // namespace rankone::cli
