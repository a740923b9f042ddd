#pragma once

#include <string_view>

namespace braidlab {

/// Answer of a triviality decision. Semi-decision procedures may answer Unknown.
enum class Verdict { Trivial, Nontrivial, Unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

constexpr Verdict verdict_of(bool trivial) { return trivial ? Verdict::Trivial : Verdict::Nontrivial; }

}  // namespace braidlab
