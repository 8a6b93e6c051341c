#include "legendra/builtins.hpp"

#include <charconv>
#include <cstdlib>

#include "legendra/dsl.hpp"
#include "legendra/error.hpp"

namespace legendra {

namespace {

constexpr std::string_view kUnknot = R"(# Legendrian unknot, tb -1
handles 0
word L1 R1
orient ev1.1=+
)";

constexpr std::string_view kK0 = R"(# once over the handle, no cusps
handles 1
ports 1
wraps 0
word
orient port1=+
)";

// S+(unknot): a down-down zigzag on the rightward upper branch
constexpr std::string_view kSharkLeft = R"(handles 0
word L1 L2 R1 R1
orient ev1.1=+
)";

constexpr std::string_view kSharkRight = R"(handles 0
word L1 L1 R2 R1
orient ev1.1=+
)";

// Two handles; the knot runs upper, lower, upper, lower with opposite
// directions on each pair, cusps between the two blocks.
constexpr std::string_view kL0Head = "handles 2\nports 2 2\nwraps 0 0 0 0\nword";
constexpr std::string_view kL0Word = "L3 X2 X4 R3 X2 X1 X3 X2";
constexpr std::string_view kL0Orient = "orient port1=+\n";

// One zigzag pair on the upper handle, descending / ascending.
constexpr std::string_view kRibbonDown = "L3 L5 X4 X2 R1 R1";
constexpr std::string_view kRibbonUp = "L1 L1 X2 X4 R5 R3";

[[noreturn]] void unknown(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::UnknownBuiltin, "'" + std::string(text) + "': " + why);
}

}  // namespace

bool is_parameterized(std::string_view name) { return name == "L" || name == "rcK0"; }

BuiltinSpec parse_builtin_spec(std::string_view text) {
  BuiltinSpec spec;
  const auto open = text.find('(');
  spec.name = std::string(text.substr(0, open));
  if (spec.name != "unknot" && spec.name != "K0" && spec.name != "shark_left" && spec.name != "shark_right" &&
      !is_parameterized(spec.name)) {
    unknown(text, "no such builtin");
  }
  if (open == std::string_view::npos) return spec;
  if (!is_parameterized(spec.name)) unknown(text, "builtin takes no parameter");
  if (text.back() != ')') unknown(text, "expected ')'");
  std::string_view num = text.substr(open + 1, text.size() - open - 2);
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), spec.k);
  if (ec != std::errc() || ptr != num.data() + num.size()) unknown(text, "parameter must be an integer");
  return spec;
}

std::string to_string(const BuiltinSpec& spec) {
  return is_parameterized(spec.name) ? spec.name + "(" + std::to_string(spec.k) + ")" : spec.name;
}

std::string builtin_text(const BuiltinSpec& spec) {
  if (!is_parameterized(spec.name) && spec.k != 0) unknown(to_string(spec), "builtin takes no parameter");
  if (spec.k < -kMaxBuiltinParam || spec.k > kMaxBuiltinParam) {
    unknown(to_string(spec), "parameter outside -10..10");
  }
  if (spec.name == "unknot") return std::string(kUnknot);
  if (spec.name == "K0") return std::string(kK0);
  if (spec.name == "shark_left") return std::string(kSharkLeft);
  if (spec.name == "shark_right") return std::string(kSharkRight);
  if (spec.name == "rcK0") {
    return "handles 1\nports 1\nwraps " + std::to_string(spec.k) + "\nword\norient port1=+\n";
  }
  if (spec.name == "L") {
    std::string text = "# L(" + std::to_string(spec.k) + "): " + std::to_string(std::abs(spec.k)) +
                       " zigzag pair(s) on the upper handle\n";
    text += kL0Head;
    for (int j = 0; j < std::abs(spec.k); ++j) {
      text += ' ';
      text += spec.k > 0 ? kRibbonDown : kRibbonUp;
    }
    text += ' ';
    text += kL0Word;
    text += '\n';
    text += kL0Orient;
    return text;
  }
  unknown(spec.name, "no such builtin");
}

FrontDiagram builtin(const BuiltinSpec& spec) { return parse(builtin_text(spec)); }

std::vector<BuiltinSpec> builtin_corpus() {
  std::vector<BuiltinSpec> out = {{"unknot", 0}, {"K0", 0}, {"shark_left", 0}, {"shark_right", 0}};
  for (int k = -3; k <= 3; ++k) out.push_back({"L", k});
  for (int k = -3; k <= 3; ++k) out.push_back({"rcK0", k});
  return out;
}

}  // namespace legendra
