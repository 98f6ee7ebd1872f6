#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nc/core.hpp"

namespace nc {

/// Generator family selector.
enum class Family { Ln, Pd };

struct FamilyParam {
  Family family;
  int parameter;
};

/// Code on neurons 1..n+6: {}, 1, 2, 3, 123, 145, 45, 2456, then 4k for
/// k = 6..n+6, 4k(k+1) for k = 6..n+5, and finally 34(n+6).
/// Throws InvalidParameter for n < 0.
Code gen_Ln(int n);

/// Prism code on 1..d+1 and 1bar..(d+2)bar: every subset of
/// {1..d+1, ibar} \ {i} for each i, plus {1bar..(d+2)bar}.
/// Throws InvalidParameter for d < 1.
Code gen_Pd(int d);

Code generate(const FamilyParam& p);

/// A cited fact about a registry code. Values are never computed here.
struct CitedFact {
  std::string fact;
  std::string value;
  std::string source;
};

struct RegistryEntry {
  std::string name;
  Code code;
  std::vector<CitedFact> metadata;
};

/// Named codes: the literal ones in data/registry.json plus "Ln:<n>" and
/// "Pd:<d>". Throws UnknownCode.
RegistryEntry registry(std::string_view name);

/// Literal entry names, in data-file order.
std::vector<std::string> registry_names();

}  // namespace nc
