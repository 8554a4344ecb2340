#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent {

/// Permutation of {1..d}, stored 0-based as an image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(static_cast<size_t>(degree)) {
    if (degree < 1) throw std::invalid_argument("Perm: degree must be >= 1");
    std::iota(img_.begin(), img_.end(), 0);
  }
  static Perm from_images(std::vector<int> images) {
    Perm p;
    p.img_ = std::move(images);
    std::vector<bool> seen(p.img_.size(), false);
    for (int x : p.img_) {
      if (x < 0 || x >= static_cast<int>(p.img_.size()) || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("Perm: image table is not a bijection");
      seen[static_cast<size_t>(x)] = true;
    }
    return p;
  }

  /// Parses cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)"; "()" is
  /// the identity.  Commas are accepted as separators.
  static Perm parse(std::string const& text, int degree) {
    Perm p(degree);
    size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("Perm: expected '(' in " + text);
      ++i;
      std::vector<int> cyc;
      skip();
      while (i < text.size() && text[i] != ')') {
        size_t j = i;
        while (j < text.size() && isdigit(text[j])) ++j;
        if (j == i) throw std::invalid_argument("Perm: malformed cycle in " + text);
        int v = std::stoi(text.substr(i, j - i));
        if (v < 1 || v > degree)
          throw std::invalid_argument("Perm: point out of range in " + text);
        cyc.push_back(v - 1);
        i = j;
        skip();
      }
      if (i == text.size()) throw std::invalid_argument("Perm: missing ')' in " + text);
      ++i;
      skip();
      for (size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
        if (cyc.size() > 1) p.img_[static_cast<size_t>(from)] = to;
      }
    }
    // validate disjointness via bijection check
    return from_images(p.img_);
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
  std::vector<int> const& images() const { return img_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (img_[static_cast<size_t>(x)] != x) return false;
    return true;
  }

  /// (a*b)(x) = a(b(x)); b acts first.
  friend Perm operator*(Perm const& a, Perm const& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.img_.resize(a.img_.size());
    for (int x = 0; x < a.degree(); ++x) r.img_[static_cast<size_t>(x)] = a(b(x));
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int x = 0; x < degree(); ++x) r.img_[static_cast<size_t>(img_[static_cast<size_t>(x)])] = x;
    return r;
  }

  friend bool operator==(Perm const& a, Perm const& b) = default;
  friend auto operator<=>(Perm const& a, Perm const& b) = default;

  std::string str() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (int x = 0; x < degree(); ++x) {
      if (seen[static_cast<size_t>(x)] || img_[static_cast<size_t>(x)] == x) continue;
      any = true;
      os << '(';
      int c = x;
      bool first = true;
      while (!seen[static_cast<size_t>(c)]) {
        seen[static_cast<size_t>(c)] = true;
        if (!first) os << ' ';
        os << c + 1;
        first = false;
        c = img_[static_cast<size_t>(c)];
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

  friend std::ostream& operator<<(std::ostream& os, Perm const& p) { return os << p.str(); }

 private:
  std::vector<int> img_;
};

}  // namespace descent
