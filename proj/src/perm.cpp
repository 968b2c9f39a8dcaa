#include "brainswap/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>

#include "brainswap/errors.hpp"

namespace brainswap {

namespace {

// Labels beyond this are rejected by the parser; they would only make the
// dense image arrays absurdly large.
constexpr Point kMaxParsedLabel = 1u << 22;

[[maybe_unused]] bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (Point v : images) {
    if (v < 1 || v > images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

const char* to_string(Parity parity) {
  return parity == Parity::even ? "even" : "odd";
}

// ---------------------------------------------------------------- Cycle

Cycle::Cycle(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw InvalidArgument("a cycle needs at least two points");
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) {
    throw InvalidArgument("cycle labels must be positive");
  }
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw InvalidArgument("repeated label " + std::to_string(*dup) + " in cycle");
  }
}

Cycle::Cycle(std::initializer_list<Point> points)
    : Cycle(std::vector<Point>(points)) {}

Point Cycle::max_point() const {
  return *std::max_element(points_.begin(), points_.end());
}

bool Cycle::contains(Point point) const {
  return std::find(points_.begin(), points_.end(), point) != points_.end();
}

Point Cycle::apply(Point point) const {
  auto it = std::find(points_.begin(), points_.end(), point);
  if (it == points_.end()) return point;
  ++it;
  return it == points_.end() ? points_.front() : *it;
}

Cycle Cycle::canonical() const {
  std::vector<Point> rotated = points_;
  std::rotate(rotated.begin(), std::min_element(rotated.begin(), rotated.end()),
              rotated.end());
  return Cycle(std::move(rotated));
}

Cycle Cycle::reversed() const {
  return Cycle(std::vector<Point>(points_.rbegin(), points_.rend()));
}

Cycle Cycle::relabeled(Point from, Point to) const {
  std::vector<Point> out = points_;
  std::replace(out.begin(), out.end(), from, to);
  return Cycle(std::move(out));
}

Cycle Cycle::swapped_labels(Point a, Point b) const {
  std::vector<Point> out = points_;
  for (Point& v : out) {
    if (v == a) {
      v = b;
    } else if (v == b) {
      v = a;
    }
  }
  return Cycle(std::move(out));
}

bool Cycle::same_as(const Cycle& other) const {
  return length() == other.length() && canonical() == other.canonical();
}

Permutation Cycle::to_permutation() const {
  std::vector<Point> images(max_point());
  for (Point i = 1; i <= images.size(); ++i) images[i - 1] = i;
  for (std::size_t j = 0; j < points_.size(); ++j) {
    images[points_[j] - 1] = points_[(j + 1) % points_.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::string Cycle::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(points_[j]);
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------- Permutation

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point v = images[i];
    if (v < 1 || v > images.size()) {
      throw InvalidArgument("image " + std::to_string(v) + " of point " +
                            std::to_string(i + 1) + " is out of range");
    }
    if (seen[v]) {
      throw InvalidArgument("label " + std::to_string(v) + " appears twice among images");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::span<const Cycle> cycles) {
  return product(cycles);
}

bool Permutation::is_identity() const { return largest_moved() == 0; }

Point Permutation::largest_moved() const {
  for (std::size_t i = images_.size(); i > 0; --i) {
    if (images_[i - 1] != i) return static_cast<Point>(i);
  }
  return 0;
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  std::vector<Point> images = images_;
  images.reserve(degree);
  for (std::size_t i = images_.size(); i < degree; ++i) {
    images.push_back(static_cast<Point>(i + 1));
  }
  return Permutation(std::move(images));
}

bool operator==(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  for (Point i = 1; i <= n; ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const std::size_t n = std::max(p.degree(), q.degree());
  std::vector<Point> images(n);
  for (Point i = 1; i <= n; ++i) images[i - 1] = p(q(i));
  assert(is_bijection(images));
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point i = 1; i <= p.degree(); ++i) images[p(i) - 1] = i;
  assert(is_bijection(images));
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, std::int64_t m) {
  Permutation base = m < 0 ? inverse(p) : p;
  Permutation result = Permutation::identity(p.degree());
  // |m| computed without negating INT64_MIN.
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1
                          : static_cast<std::uint64_t>(m);
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(p.degree() + 1, false);
  for (Point start = 1; start <= p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    std::vector<Point> points;
    for (Point v = start; !seen[v]; v = p(v)) {
      seen[v] = true;
      points.push_back(v);
    }
    cycles.emplace_back(std::move(points));
  }
  return cycles;
}

Parity parity(const Permutation& p) {
  std::size_t orbits = 0;
  std::vector<bool> seen(p.degree() + 1, false);
  for (Point start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    ++orbits;
    for (Point v = start; !seen[v]; v = p(v)) seen[v] = true;
  }
  return (p.degree() - orbits) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Point> support(const Permutation& p) {
  std::vector<Point> moved;
  for (Point i = 1; i <= p.degree(); ++i) {
    if (p(i) != i) moved.push_back(i);
  }
  return moved;
}

Permutation product(std::span<const Cycle> factors) {
  std::size_t n = 0;
  for (const Cycle& c : factors) n = std::max<std::size_t>(n, c.max_point());
  std::vector<Point> images(n);
  for (Point i = 1; i <= n; ++i) {
    Point v = i;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) v = it->apply(v);
    images[i - 1] = v;
  }
  return Permutation::from_images(std::move(images));
}

// --------------------------------------------------------- cycle notation

namespace {

class CycleParser {
 public:
  explicit CycleParser(std::string_view text) : text_(text) {}

  Permutation parse() {
    skip_ws();
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      skip_ws();
      if (pos_ != text_.size()) fail("unexpected trailing token", token_at(pos_));
      return Permutation();
    }
    std::vector<Cycle> cycles;
    while (pos_ < text_.size()) {
      cycles.push_back(parse_cycle());
      skip_ws();
    }
    if (cycles.empty()) fail("empty input", "");
    return product(cycles);
  }

  Cycle parse_single() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty input", "");
    Cycle c = parse_cycle();
    skip_ws();
    if (pos_ != text_.size()) fail("expected exactly one cycle", token_at(pos_));
    return c;
  }

 private:
  Cycle parse_cycle() {
    if (text_[pos_] != '(') fail("expected '('", token_at(pos_));
    const std::size_t open = pos_++;
    std::vector<Point> points;
    skip_ws();
    points.push_back(parse_label());
    for (;;) {
      const std::size_t before = pos_;
      skip_ws();
      if (pos_ >= text_.size()) fail("unbalanced parenthesis", std::string(text_.substr(open)));
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] == ',') {
        ++pos_;
        skip_ws();
      } else if (before == pos_) {
        fail("expected ',' or whitespace between labels", token_at(pos_));
      }
      const std::size_t label_pos = pos_;
      const Point label = parse_label();
      if (std::find(points.begin(), points.end(), label) != points.end()) {
        fail("repeated label in cycle", token_at(label_pos));
      }
      points.push_back(label);
    }
    if (points.size() < 2) fail("a cycle needs at least two labels", std::string(text_.substr(open, pos_ - open)));
    return Cycle(std::move(points));
  }

  Point parse_label() {
    if (pos_ >= text_.size()) fail("unbalanced parenthesis", "");
    const std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") {
      fail("expected a label", token_at(start));
    }
    if (tok.front() == '-') fail("labels must be positive integers", std::string(tok));
    std::uint64_t value = 0;
    const std::string_view digits = tok.front() == '+' ? tok.substr(1) : tok;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || value > kMaxParsedLabel) {
      fail("label too large", std::string(tok));
    }
    if (value == 0) fail("labels must be positive integers", std::string(tok));
    return static_cast<Point>(value);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string token_at(std::size_t at) const {
    if (at >= text_.size()) return "<end of input>";
    std::size_t end = at + 1;
    if (std::isdigit(static_cast<unsigned char>(text_[at])) || text_[at] == '-') {
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    } else if (std::isalpha(static_cast<unsigned char>(text_[at]))) {
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    }
    return std::string(text_.substr(at, end - at));
  }

  [[noreturn]] void fail(const std::string& what, const std::string& token) const {
    std::ostringstream msg;
    msg << "parse error at offset " << pos_ << ": " << what;
    if (!token.empty()) msg << " (token '" << token << "')";
    throw ParseError(msg.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text) { return CycleParser(text).parse(); }

Cycle parse_cycle(std::string_view text) { return CycleParser(text).parse_single(); }

std::string format_cycles(const Permutation& p) {
  const auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "id";
  std::string out;
  for (const Cycle& c : cycles) out += c.to_string();
  return out;
}

}  // namespace brainswap
