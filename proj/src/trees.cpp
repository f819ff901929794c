#include "opkit/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace opkit {

namespace {

bool is_tag_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_tag_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

GeneratorSpec::GeneratorSpec(int arity_, int degree_, Symmetry symmetry_)
    : arity(arity_), degree(degree_), symmetry(symmetry_) {
  if (arity < 2) throw std::invalid_argument("generator arity must be at least 2, got " + std::to_string(arity));
  if (degree != 0 && degree != 1)
    throw std::invalid_argument("generator degree must be 0 or 1, got " + std::to_string(degree));
}

// ---------------------------------------------------------------------------

TreeShape::TreeShape() : s_("*"), leaves_(1), vertices_(0) {}

TreeShape TreeShape::corolla(int arity, std::string_view tag) {
  if (arity < 1) throw std::invalid_argument("corolla arity must be positive");
  std::string s(tag);
  s += '(';
  s.append(static_cast<std::size_t>(arity), '*');
  s += ')';
  return parse(s);
}

TreeShape TreeShape::parse(std::string_view text) {
  std::size_t pos = 0;
  int leaves = 0, vertices = 0;
  std::function<void()> tree = [&] {
    if (pos >= text.size()) throw std::invalid_argument("truncated tree shape '" + std::string(text) + "'");
    if (text[pos] == '*') {
      ++pos;
      ++leaves;
      return;
    }
    if (is_tag_start(text[pos])) {
      while (pos < text.size() && is_tag_char(text[pos])) ++pos;
    }
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument("malformed tree shape '" + std::string(text) + "'");
    ++pos;
    ++vertices;
    int children = 0;
    while (pos < text.size() && text[pos] != ')') {
      tree();
      ++children;
    }
    if (pos >= text.size()) throw std::invalid_argument("unbalanced tree shape '" + std::string(text) + "'");
    if (children == 0) throw std::invalid_argument("vertex without children in '" + std::string(text) + "'");
    ++pos;
  };
  tree();
  if (pos != text.size()) throw std::invalid_argument("trailing characters in tree shape '" + std::string(text) + "'");
  return TreeShape(std::string(text), leaves, vertices);
}

bool TreeShape::is_uniform(int n) const {
  std::vector<int> children;
  for (char c : s_) {
    if (c == '(') {
      if (!children.empty()) ++children.back();
      children.push_back(0);
    } else if (c == '*') {
      if (!children.empty()) ++children.back();
    } else if (c == ')') {
      if (children.back() != n) return false;
      children.pop_back();
    } else {
      return false;
    }
  }
  return true;
}

std::size_t TreeShape::leaf_offset(int p) const {
  int seen = 0;
  for (std::size_t k = 0; k < s_.size(); ++k) {
    if (s_[k] == '*') {
      if (seen == p) return k;
      ++seen;
    }
  }
  throw std::invalid_argument("leaf index out of range");
}

int TreeShape::vertices_after_leaf(int p) const {
  auto off = leaf_offset(p);
  return static_cast<int>(std::count(s_.begin() + static_cast<std::ptrdiff_t>(off), s_.end(), '('));
}

TreeShape TreeShape::graft(int p, const TreeShape& sub) const {
  auto off = leaf_offset(p);
  std::string s;
  s.reserve(s_.size() + sub.s_.size());
  s.append(s_, 0, off);
  s += sub.s_;
  s.append(s_, off + 1);
  return TreeShape(std::move(s), leaves_ + sub.leaves_ - 1, vertices_ + sub.vertices_);
}

// ---------------------------------------------------------------------------

TreeMonomial::TreeMonomial(TreeShape shape_, std::vector<int> labels_)
    : shape(std::move(shape_)), labels(std::move(labels_)) {
  if (static_cast<int>(labels.size()) != shape.leaf_count())
    throw std::invalid_argument("label count does not match leaf count of " + shape.str());
  if (!is_permutation_of_range(labels))
    throw std::invalid_argument("leaf labels of " + shape.str() + " are not a permutation");
}

TreeMonomial TreeMonomial::identity_labeled(TreeShape shape) {
  auto m = shape.leaf_count();
  return TreeMonomial(std::move(shape), Permutation::identity(m).images());
}

bool TreeMonomial::has_identity_labels() const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string TreeMonomial::to_string() const {
  std::string out;
  std::vector<bool> first;  // per open vertex: next child is the first
  std::size_t leaf = 0;
  const auto& s = shape.str();
  auto child_sep = [&] {
    if (!first.empty()) {
      if (!first.back()) out += ' ';
      first.back() = false;
    }
  };
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '*') {
      child_sep();
      out += 'x';
      out += std::to_string(labels[leaf++]);
    } else if (c == '(') {
      if (k == 0 || !is_tag_char(s[k - 1])) child_sep();
      out += '(';
      first.push_back(true);
    } else if (c == ')') {
      out += ')';
      first.pop_back();
    } else {
      // start of a tag: separator belongs before the tag
      if (k == 0 || !is_tag_char(s[k - 1])) child_sep();
      out += c;
    }
  }
  return out;
}

TreeMonomial TreeMonomial::parse(std::string_view text) {
  std::string shape;
  std::vector<int> labels;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  while (true) {
    skip();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == '(' || c == ')') {
      shape += c;
      ++pos;
      continue;
    }
    if (!is_tag_start(c)) fail("unexpected character");
    auto start = pos;
    while (pos < text.size() && is_tag_char(text[pos])) ++pos;
    std::string word(text.substr(start, pos - start));
    if (pos < text.size() && text[pos] == '(') {
      shape += word;
      continue;
    }
    if (word.size() < 2 || word[0] != 'x' ||
        !std::all_of(word.begin() + 1, word.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
      fail("expected leaf x<k>");
    shape += '*';
    labels.push_back(std::stoi(word.substr(1)));
  }
  return TreeMonomial(TreeShape::parse(shape), std::move(labels));
}

// ---------------------------------------------------------------------------

Element::Element(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("element arity must be positive");
}

Element Element::monomial(TreeMonomial m, const Rational& c) {
  Element e(m.arity());
  e.add_term(m, c);
  return e;
}

Element Element::corolla(int arity) { return monomial(TreeMonomial::identity_labeled(TreeShape::corolla(arity))); }

Rational Element::coefficient(const TreeMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const TreeMonomial& m, const Rational& c) {
  if (m.arity() != arity_)
    throw std::invalid_argument("monomial " + m.to_string() + " has arity " + std::to_string(m.arity()) +
                                ", element has arity " + std::to_string(arity_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("adding elements of different arity");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("subtracting elements of different arity");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

int Element::tree_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.vertex_count());
  return d;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += to_short_string(a) + "*";
    out += m.to_string();
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

Integer fuss_catalan(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("fuss_catalan: need n >= 2 and k >= 0");
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n * k), static_cast<unsigned long>(k));
  return binom / ((n - 1) * k + 1);
}

std::vector<TreeShape> enumerate_shapes(int arity, int k) {
  if (arity < 2) throw std::invalid_argument("enumerate_shapes: arity must be at least 2");
  if (k < 1) throw std::invalid_argument("enumerate_shapes: need at least one internal vertex");
  std::vector<std::vector<std::string>> memo(static_cast<std::size_t>(k) + 1);
  memo[0] = {"*"};
  for (int v = 1; v <= k; ++v) {
    auto& out = memo[static_cast<std::size_t>(v)];
    // distribute v-1 vertices among `arity` children
    std::vector<int> split(static_cast<std::size_t>(arity), 0);
    std::function<void(int, int)> place = [&](int child, int left) {
      if (child == arity - 1) {
        split[static_cast<std::size_t>(child)] = left;
        std::vector<std::string> acc{"("};
        for (int c = 0; c < arity; ++c) {
          std::vector<std::string> next;
          const auto& opts = memo[static_cast<std::size_t>(split[static_cast<std::size_t>(c)])];
          next.reserve(acc.size() * opts.size());
          for (const auto& a : acc)
            for (const auto& o : opts) next.push_back(a + o);
          acc = std::move(next);
        }
        for (auto& a : acc) out.push_back(a + ")");
        return;
      }
      for (int here = 0; here <= left; ++here) {
        split[static_cast<std::size_t>(child)] = here;
        place(child + 1, left - here);
      }
    };
    place(0, v - 1);
  }
  auto& strs = memo[static_cast<std::size_t>(k)];
  std::sort(strs.begin(), strs.end());
  std::vector<TreeShape> shapes;
  shapes.reserve(strs.size());
  for (const auto& s : strs) shapes.push_back(TreeShape::parse(s));
  return shapes;
}

Element graft(const Element& a, int i, const Element& b, int vertex_degree) {
  const int p = a.arity(), q = b.arity();
  if (i < 1 || i > p)
    throw std::invalid_argument("slot " + std::to_string(i) + " out of range for arity " + std::to_string(p));
  Element out(p + q - 1);
  for (const auto& [ma, ca] : a.terms()) {
    const auto pos = static_cast<int>(std::find(ma.labels.begin(), ma.labels.end(), i) - ma.labels.begin());
    const int after = vertex_degree ? ma.shape.vertices_after_leaf(pos) : 0;
    std::vector<int> outer;
    outer.reserve(ma.labels.size());
    for (int l : ma.labels) outer.push_back(l < i ? l : l + q - 1);
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> labels;
      labels.reserve(static_cast<std::size_t>(p + q - 1));
      labels.insert(labels.end(), outer.begin(), outer.begin() + pos);
      for (int l : mb.labels) labels.push_back(l + i - 1);
      labels.insert(labels.end(), outer.begin() + pos + 1, outer.end());
      const int exponent = (vertex_degree * mb.vertex_count()) * (vertex_degree * after);
      Rational c = ca * cb;
      if (exponent % 2) c = -c;
      out.add_term(TreeMonomial(ma.shape.graft(pos, mb.shape), std::move(labels)), c);
    }
  }
  return out;
}

Element compose_i(const GeneratorSpec& gen, const Element& a, int i, const Element& b) {
  return graft(a, i, b, gen.degree);
}

TreeMonomial act(const Permutation& sigma, const TreeMonomial& m) {
  if (sigma.degree() != m.arity())
    throw std::invalid_argument("permutation of degree " + std::to_string(sigma.degree()) +
                                " acting on arity " + std::to_string(m.arity()));
  std::vector<int> labels;
  labels.reserve(m.labels.size());
  for (int l : m.labels) labels.push_back(sigma(l));
  return TreeMonomial(m.shape, std::move(labels));
}

Element act(const Permutation& sigma, const Element& e) {
  if (sigma.degree() != e.arity())
    throw std::invalid_argument("permutation of degree " + std::to_string(sigma.degree()) +
                                " acting on arity " + std::to_string(e.arity()));
  Element out(e.arity());
  for (const auto& [m, c] : e.terms()) out.add_term(act(sigma, m), c);
  return out;
}

Element collapse_labels(const Element& e) {
  Element out(e.arity());
  for (const auto& [m, c] : e.terms()) out.add_term(TreeMonomial::identity_labeled(m.shape), c);
  return out;
}

}  // namespace opkit
