#pragma once

#include "operadix/core.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace operadix {

struct Colour {
  int index = 0;
  bool open = false;
  auto operator<=>(const Colour&) const = default;
};

inline std::string toString(const Colour& c) {
  return (c.open ? "u" : "") + std::to_string(c.index);
}

struct Token {
  int label = 0;  // 0 encodes a bar
  bool open = false;
  bool isBar() const { return label == 0; }
  static Token bar() { return {0, false}; }
  auto operator<=>(const Token&) const = default;
};

struct IntegerString {
  std::vector<Token> tokens;
  bool outputOpen = false;
  auto operator<=>(const IntegerString&) const = default;
};

class ParseError : public std::invalid_argument {
 public:
  enum class Kind { UnknownToken, MixedDecoration, MissingLabel, ClosedOutputWithOpenLetter };
  ParseError(Kind k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
  Kind kind;
};

inline const char* kindName(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::UnknownToken: return "UnknownToken";
    case ParseError::Kind::MixedDecoration: return "MixedDecoration";
    case ParseError::Kind::MissingLabel: return "MissingLabel";
    case ParseError::Kind::ClosedOutputWithOpenLetter: return "ClosedOutputWithOpenLetter";
  }
  return "?";
}

// ---- basic queries -------------------------------------------------------

inline int arity(const IntegerString& x) {
  int k = 0;
  for (const Token& t : x.tokens) k = std::max(k, t.label);
  return k;
}

inline int barCount(const IntegerString& x) {
  return static_cast<int>(std::count_if(x.tokens.begin(), x.tokens.end(),
                                        [](const Token& t) { return t.isBar(); }));
}

inline int letterCount(const IntegerString& x) {
  return static_cast<int>(x.tokens.size()) - barCount(x);
}

inline int occurrences(const IntegerString& x, int label) {
  return static_cast<int>(std::count_if(x.tokens.begin(), x.tokens.end(),
                                        [&](const Token& t) { return t.label == label; }));
}

inline bool isOpenLabel(const IntegerString& x, int label) {
  for (const Token& t : x.tokens)
    if (t.label == label) return t.open;
  throw LabelOutOfRange("label " + std::to_string(label) + " absent");
}

// Position of the first occurrence of a label.
inline std::size_t firstOccurrence(const IntegerString& x, int label) {
  for (std::size_t p = 0; p < x.tokens.size(); ++p)
    if (x.tokens[p].label == label) return p;
  throw LabelOutOfRange("label " + std::to_string(label) + " absent");
}

// Throws ParseError if the invariants of an integer-string fail.
inline void validate(const IntegerString& x) {
  const int k = arity(x);
  std::vector<int> seen(k + 1, -1);
  for (const Token& t : x.tokens) {
    if (t.isBar()) continue;
    if (t.label < 0) throw ParseError(ParseError::Kind::UnknownToken, "negative label");
    int o = t.open ? 1 : 0;
    if (seen[t.label] == -1) {
      seen[t.label] = o;
    } else if (seen[t.label] != o) {
      throw ParseError(ParseError::Kind::MixedDecoration,
                       "label " + std::to_string(t.label) + " is both open and closed");
    }
  }
  for (int i = 1; i <= k; ++i)
    if (seen[i] == -1)
      throw ParseError(ParseError::Kind::MissingLabel, "label " + std::to_string(i) + " missing");
  if (!x.outputOpen)
    for (int i = 1; i <= k; ++i)
      if (seen[i] == 1)
        throw ParseError(ParseError::Kind::ClosedOutputWithOpenLetter,
                         "open letter " + std::to_string(i) + " in a closed-output string");
}

// ---- text form -------------------------------------------------------------
// Labels 1..9 print as one digit; larger labels print in braces, e.g. {12}.

inline std::string print(const IntegerString& x) {
  std::string s = "(";
  for (const Token& t : x.tokens) {
    if (t.isBar()) {
      s += '|';
      continue;
    }
    if (t.open) s += 'u';
    if (t.label <= 9)
      s += static_cast<char>('0' + t.label);
    else
      s += "{" + std::to_string(t.label) + "}";
  }
  s += x.outputOpen ? ")^o" : ")^c";
  return s;
}

inline IntegerString parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&](const std::string& why) {
    throw ParseError(ParseError::Kind::UnknownToken, why + " in \"" + text + "\"");
  };
  if (s.size() < 4 || s.front() != '(') fail("expected '('");
  const std::size_t close = s.rfind(')');
  if (close == std::string::npos) fail("expected ')'");
  const std::string suffix = s.substr(close + 1);
  IntegerString x;
  if (suffix == "^o")
    x.outputOpen = true;
  else if (suffix == "^c")
    x.outputOpen = false;
  else
    fail("expected suffix ^c or ^o, got '" + suffix + "'");
  std::size_t i = 1;
  while (i < close) {
    char c = s[i];
    if (c == '|') {
      x.tokens.push_back(Token::bar());
      ++i;
      continue;
    }
    bool open = false;
    if (c == 'u') {
      open = true;
      ++i;
      if (i >= close) fail("dangling 'u'");
      c = s[i];
    }
    int label = 0;
    if (c == '{') {
      std::size_t e = s.find('}', i);
      if (e == std::string::npos || e > close || e == i + 1) fail("unterminated label");
      for (std::size_t j = i + 1; j < e; ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail("bad label");
        label = label * 10 + (s[j] - '0');
        if (label > 1000000) fail("label too large");
      }
      i = e + 1;
    } else if (c >= '1' && c <= '9') {
      label = c - '0';
      ++i;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (label <= 0) fail("label must be positive");
    x.tokens.push_back({label, open});
  }
  validate(x);
  return x;
}

// ---- colours ---------------------------------------------------------------

struct Signature {
  std::vector<Colour> inputs;
  Colour output;
  auto operator<=>(const Signature&) const = default;
};

inline Colour inputColour(const IntegerString& x, int label) {
  if (label < 1 || label > arity(x)) throw LabelOutOfRange("label " + std::to_string(label));
  return {occurrences(x, label) - 1, isOpenLabel(x, label)};
}

inline Colour outputColour(const IntegerString& x) { return {barCount(x), x.outputOpen}; }

inline Signature colours(const IntegerString& x) {
  Signature s;
  const int k = arity(x);
  std::vector<int> occ(k + 1, 0);
  std::vector<bool> op(k + 1, false);
  for (const Token& t : x.tokens)
    if (!t.isBar()) {
      ++occ[t.label];
      op[t.label] = t.open;
    }
  for (int i = 1; i <= k; ++i) s.inputs.push_back({occ[i] - 1, op[i]});
  s.output = outputColour(x);
  return s;
}

// ---- operad structure ------------------------------------------------------

inline IntegerString identityString(const Colour& c) {
  IntegerString x;
  x.outputOpen = c.open;
  for (int b = 0; b < c.index; ++b) {
    x.tokens.push_back({1, c.open});
    x.tokens.push_back(Token::bar());
  }
  x.tokens.push_back({1, c.open});
  return x;
}

inline IntegerString compose(const IntegerString& f, int i, const IntegerString& g) {
  const int kf = arity(f);
  if (i < 1 || i > kf) throw LabelOutOfRange("slot " + std::to_string(i) + " out of range");
  if (inputColour(f, i) != outputColour(g))
    throw ColourMismatch("slot " + std::to_string(i) + " has colour " + toString(inputColour(f, i)) +
                         " but the inserted string has output colour " + toString(outputColour(g)));
  const int kg = arity(g);
  IntegerString r;
  r.outputOpen = f.outputOpen;
  r.tokens.reserve(f.tokens.size() + g.tokens.size());
  std::size_t cursor = 0;  // start of the next segment of g
  for (const Token& t : f.tokens) {
    if (t.label == i) {
      for (; cursor < g.tokens.size() && !g.tokens[cursor].isBar(); ++cursor)
        r.tokens.push_back({g.tokens[cursor].label + i - 1, g.tokens[cursor].open});
      ++cursor;
    } else if (t.label > i) {
      r.tokens.push_back({t.label + kg - 1, t.open});
    } else {
      r.tokens.push_back(t);
    }
  }
  return r;
}

// sigma is 1-based: sigma[i-1] is the image of label i.
inline IntegerString symAct(const std::vector<int>& sigma, const IntegerString& x) {
  const int k = arity(x);
  if (static_cast<int>(sigma.size()) != k) throw ShapeError("permutation size differs from arity");
  std::vector<bool> hit(k + 1, false);
  for (int s : sigma) {
    if (s < 1 || s > k || hit[s]) throw ShapeError("not a permutation");
    hit[s] = true;
  }
  IntegerString r = x;
  for (Token& t : r.tokens)
    if (!t.isBar()) t.label = sigma[t.label - 1];
  return r;
}

// Block permutation induced on f o_i g by sigma acting on f (g of arity l).
inline std::vector<int> blockPermutation(const std::vector<int>& sigma, int i, int l) {
  const int k = static_cast<int>(sigma.size());
  // position p of f maps to sigma(p); the new labels are laid out in blocks
  std::vector<int> width(k + 1, 1);
  width[i] = l;
  // start of the block for target position q in the permuted arrangement
  std::vector<int> inv(k + 1);
  for (int p = 1; p <= k; ++p) inv[sigma[p - 1]] = p;
  std::vector<int> start(k + 2, 1);
  for (int q = 1; q <= k; ++q) start[q + 1] = start[q] + width[inv[q]];
  std::vector<int> out;
  for (int p = 1; p <= k; ++p)
    for (int w = 0; w < width[p]; ++w) out.push_back(start[sigma[p - 1]] + w);
  return out;
}

// ---- complexity and filtration ---------------------------------------------

inline int cij(const IntegerString& x, int i, int j) {
  int last = 0, changes = 0;
  for (const Token& t : x.tokens) {
    if (t.label != i && t.label != j) continue;
    if (last != 0 && t.label != last) ++changes;
    last = t.label;
  }
  return changes;
}

namespace detail {
// Returns the first-occurrence correction for a mixed pair.
inline int mixedCorrection(const IntegerString& x, int i, int j, bool variant) {
  if (i > j) std::swap(i, j);
  const bool oi = isOpenLabel(x, i), oj = isOpenLabel(x, j);
  if (oi == oj) return 0;
  const bool iFirst = firstOccurrence(x, i) < firstOccurrence(x, j);
  // +1 exactly when the open letter occurs first
  const bool openFirst = oi ? iFirst : !iFirst;
  int add = openFirst ? 1 : 0;
  if (variant) add = 1 - add;
  return add;
}
}  // namespace detail

inline int cPrimeij(const IntegerString& x, int i, int j) {
  return cij(x, i, j) + detail::mixedCorrection(x, i, j, false);
}

inline int cDblPrimeij(const IntegerString& x, int i, int j) {
  return cij(x, i, j) + detail::mixedCorrection(x, i, j, true);
}

enum class FiltrationVariant { Standard, Primed };

inline bool inFiltration(const IntegerString& x, int m,
                         FiltrationVariant v = FiltrationVariant::Standard) {
  const int k = arity(x);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const bool oi = isOpenLabel(x, i), oj = isOpenLabel(x, j);
      const int c = cij(x, i, j);
      if (!oi && !oj) {
        if (c > m) return false;
      } else if (oi && oj) {
        if (c > m - 1) return false;
      } else {
        const int cp = c + detail::mixedCorrection(x, i, j, v == FiltrationVariant::Primed);
        if (cp > m) return false;
      }
    }
  return true;
}

// ---- Joyal duality -----------------------------------------------------------

struct MonotoneMap {
  int source = 0;  // n
  int target = 0;  // m
  std::vector<int> values;  // length n+1, weakly increasing into [0, m]
  auto operator<=>(const MonotoneMap&) const = default;

  bool valid() const {
    if (static_cast<int>(values.size()) != source + 1) return false;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] > target) return false;
      if (i && values[i - 1] > values[i]) return false;
    }
    return true;
  }
};

// The i-th letter is preceded by values[i] bars; trailing bars fill up to target.
inline IntegerString joyalToString(const MonotoneMap& psi, bool inputOpen = false,
                                   bool outputOpen = false) {
  if (!psi.valid()) throw ShapeError("invalid monotone map");
  if (inputOpen && !outputOpen) throw ColourMismatch("open input requires open output");
  IntegerString x;
  x.outputOpen = outputOpen;
  int bars = 0;
  for (int v : psi.values) {
    while (bars < v) {
      x.tokens.push_back(Token::bar());
      ++bars;
    }
    x.tokens.push_back({1, inputOpen});
  }
  while (bars < psi.target) {
    x.tokens.push_back(Token::bar());
    ++bars;
  }
  return x;
}

inline MonotoneMap stringToJoyal(const IntegerString& x) {
  if (arity(x) != 1) throw ShapeError("Joyal duality needs a unary string");
  MonotoneMap psi;
  psi.target = barCount(x);
  int bars = 0;
  for (const Token& t : x.tokens) {
    if (t.isBar())
      ++bars;
    else
      psi.values.push_back(bars);
  }
  psi.source = static_cast<int>(psi.values.size()) - 1;
  return psi;
}

// The bi-pointed dual phi: [m+1] -> [n+1]; phi(j) counts letters before bar j.
inline std::vector<int> joyalDual(const MonotoneMap& psi) {
  std::vector<int> phi(psi.target + 2);
  for (int j = 0; j <= psi.target + 1; ++j) {
    int c = 0;
    for (int v : psi.values)
      if (v < j) ++c;
    phi[j] = c;
  }
  return phi;
}

inline std::vector<MonotoneMap> allMonotoneMaps(int n, int m) {
  std::vector<MonotoneMap> out;
  MonotoneMap cur{n, m, std::vector<int>(n + 1, 0)};
  for (;;) {
    out.push_back(cur);
    int p = n;
    while (p >= 0 && cur.values[p] == m) --p;
    if (p < 0) break;
    ++cur.values[p];
    for (int q = p + 1; q <= n; ++q) cur.values[q] = cur.values[p];
  }
  return out;
}

// ---- enumeration ---------------------------------------------------------------

inline std::vector<IntegerString> enumerate(const std::vector<Colour>& inputs, const Colour& output,
                                            int m,
                                            FiltrationVariant v = FiltrationVariant::Standard) {
  std::vector<IntegerString> out;
  if (!output.open)
    for (const Colour& c : inputs)
      if (c.open) return out;
  std::vector<Token> pool;
  for (int b = 0; b < output.index; ++b) pool.push_back(Token::bar());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (int r = 0; r <= inputs[i].index; ++r) pool.push_back({static_cast<int>(i) + 1, inputs[i].open});
  std::sort(pool.begin(), pool.end());
  std::vector<std::pair<std::string, IntegerString>> found;
  do {
    IntegerString x{pool, output.open};
    if (inFiltration(x, m, v)) found.emplace_back(print(x), x);
  } while (std::next_permutation(pool.begin(), pool.end()));
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& p : found) out.push_back(std::move(p.second));
  return out;
}

// Every valid string with at most maxTokens tokens and at most maxLabels labels.
inline std::vector<IntegerString> allStrings(int maxTokens, int maxLabels) {
  std::vector<IntegerString> out;
  for (int n = 0; n <= maxTokens; ++n) {
    std::vector<int> seq(n, 0);
    for (;;) {
      int k = 0;
      bool dense = true;
      {
        std::vector<bool> seen(maxLabels + 1, false);
        for (int s : seq)
          if (s) seen[s] = true;
        for (int l = 1; l <= maxLabels; ++l) {
          if (seen[l]) {
            if (k != l - 1) dense = false;
            k = l;
          }
        }
      }
      if (dense) {
        for (int mask = 0; mask < (1 << k); ++mask)
          for (int oo = 0; oo < 2; ++oo) {
            if (!oo && mask) continue;
            IntegerString x;
            x.outputOpen = oo;
            for (int s : seq)
              x.tokens.push_back(s ? Token{s, bool((mask >> (s - 1)) & 1)} : Token::bar());
            out.push_back(std::move(x));
          }
      }
      int p = n - 1;
      while (p >= 0 && seq[p] == maxLabels) seq[p--] = 0;
      if (p < 0) break;
      ++seq[p];
    }
  }
  return out;
}

// ---- planar tree view (valid on RL_2) ------------------------------------------

struct TreeNode {
  enum class Kind { Labelled, Unlabelled, Terminal };
  Kind kind = Kind::Unlabelled;
  int label = 0;
  bool open = false;
  std::vector<TreeNode> children;

  static TreeNode terminal() { return {Kind::Terminal, 0, false, {}}; }
  static TreeNode leaf() { return {Kind::Unlabelled, 0, false, {}}; }
  static TreeNode marked(int label, bool open, std::vector<TreeNode> ch) {
    return {Kind::Labelled, label, open, std::move(ch)};
  }
  static TreeNode joint(std::vector<TreeNode> ch) { return {Kind::Unlabelled, 0, false, std::move(ch)}; }
  bool operator==(const TreeNode&) const = default;
};

struct RootedTree {
  std::vector<TreeNode> top;  // children of the root, clockwise order
  bool outputOpen = false;
  bool operator==(const RootedTree&) const = default;
};

class NotPlanar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<TreeNode> parseForest(const std::vector<Token>& t, std::size_t lo, std::size_t hi);

inline TreeNode segmentNode(const std::vector<Token>& t, std::size_t lo, std::size_t hi) {
  if (lo == hi) return TreeNode::leaf();
  std::vector<TreeNode> items = parseForest(t, lo, hi);
  if (items.size() == 1) return std::move(items.front());
  return TreeNode::joint(std::move(items));
}

inline std::vector<TreeNode> parseForest(const std::vector<Token>& t, std::size_t lo, std::size_t hi) {
  std::vector<TreeNode> items;
  std::size_t p = lo;
  while (p < hi) {
    if (t[p].isBar()) {
      items.push_back(TreeNode::terminal());
      ++p;
      continue;
    }
    const int a = t[p].label;
    std::vector<std::size_t> occ;
    for (std::size_t q = p; q < hi; ++q)
      if (t[q].label == a) occ.push_back(q);
    // every letter between the first and last occurrence must stay in scope
    for (std::size_t q = occ.front(); q <= occ.back(); ++q) {
      if (t[q].isBar() || t[q].label == a) continue;
      for (std::size_t r = lo; r < hi; ++r)
        if (t[r].label == t[q].label && (r < occ.front() || r > occ.back()))
          throw NotPlanar("letters interleave; the string is not in RL_2");
    }
    std::vector<TreeNode> ch;
    for (std::size_t s = 0; s + 1 < occ.size(); ++s) ch.push_back(segmentNode(t, occ[s] + 1, occ[s + 1]));
    items.push_back(TreeNode::marked(a, t[p].open, std::move(ch)));
    p = occ.back() + 1;
  }
  return items;
}

inline void contour(const TreeNode& n, std::vector<Token>& out) {
  switch (n.kind) {
    case TreeNode::Kind::Terminal:
      out.push_back(Token::bar());
      return;
    case TreeNode::Kind::Unlabelled:
      for (const TreeNode& c : n.children) contour(c, out);
      return;
    case TreeNode::Kind::Labelled:
      out.push_back({n.label, n.open});
      for (const TreeNode& c : n.children) {
        contour(c, out);
        out.push_back({n.label, n.open});
      }
      return;
  }
}

}  // namespace detail

inline RootedTree treeView(const IntegerString& x) {
  // a label whose occurrences are not contiguous in scope is rejected by parseForest
  return {detail::parseForest(x.tokens, 0, x.tokens.size()), x.outputOpen};
}

inline IntegerString treeToString(const RootedTree& t) {
  IntegerString x;
  x.outputOpen = t.outputOpen;
  for (const TreeNode& n : t.top) detail::contour(n, x.tokens);
  validate(x);
  return x;
}

namespace detail {
inline void drawNode(const TreeNode& n, const std::string& prefix, bool last, std::string& out) {
  out += prefix + (last ? "`-- " : "|-- ");
  switch (n.kind) {
    case TreeNode::Kind::Terminal: out += "terminal\n"; break;
    case TreeNode::Kind::Unlabelled: out += n.children.empty() ? "leaf\n" : "*\n"; break;
    case TreeNode::Kind::Labelled:
      out += (n.open ? "u" : "") + std::to_string(n.label) + "\n";
      break;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i)
    drawNode(n.children[i], prefix + (last ? "    " : "|   "), i + 1 == n.children.size(), out);
}
}  // namespace detail

inline std::string drawTree(const RootedTree& t) {
  std::string out = t.outputOpen ? "root (o)\n" : "root\n";
  for (std::size_t i = 0; i < t.top.size(); ++i)
    detail::drawNode(t.top[i], "", i + 1 == t.top.size(), out);
  return out;
}

}  // namespace operadix
