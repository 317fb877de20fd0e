#include "frobcalc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frobcalc/error.hpp"

namespace frobcalc {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

unsigned top_count(ArrowType t) { return 2 * t.src + 1; }
unsigned bottom_count(ArrowType t) { return 2 * t.tgt + 1; }

int magnitude(int p) { return p < 0 ? -p : p; }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Diagram

Diagram::Diagram() : class_of_{0, 0}, labels_(1) { finish(); }

Diagram Diagram::identity(unsigned n) {
  Diagram d(ArrowType{n, n});
  unsigned k = 2 * n + 1;
  d.class_of_.resize(2 * static_cast<std::size_t>(k));
  for (unsigned i = 0; i < k; ++i) {
    d.class_of_[i] = i;
    d.class_of_[k + i] = i;
  }
  d.labels_.assign(k, Ordinal());
  d.finish();
  return d;
}

std::size_t Diagram::slot(int position) const {
  unsigned tops = top_count(type_);
  if (position > 0 && static_cast<unsigned>(position) <= tops) {
    return static_cast<std::size_t>(position - 1);
  }
  if (position < 0 && static_cast<unsigned>(-position) <= bottom_count(type_)) {
    return tops + static_cast<std::size_t>(-position - 1);
  }
  throw std::out_of_range("position " + std::to_string(position) +
                          " outside type " + to_string(type_));
}

Diagram Diagram::from_classes(ArrowType type,
                              const std::vector<std::vector<int>>& classes,
                              std::vector<Ordinal> labels) {
  if (!labels.empty() && labels.size() != classes.size()) {
    throw std::invalid_argument("one label per class expected");
  }
  if (labels.empty()) {
    labels.assign(classes.size(), Ordinal());
  }
  Diagram d(type);
  d.class_of_.assign(top_count(type) + bottom_count(type), kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw std::invalid_argument("empty class");
    }
    for (int p : classes[c]) {
      std::size_t s;
      try {
        s = d.slot(p);
      } catch (const std::out_of_range& e) {
        throw std::invalid_argument(e.what());
      }
      if (d.class_of_[s] != kUnassigned) {
        throw std::invalid_argument("position " + std::to_string(p) +
                                    " occurs twice");
      }
      d.class_of_[s] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::size_t s = 0; s < d.class_of_.size(); ++s) {
    if (d.class_of_[s] == kUnassigned) {
      unsigned tops = top_count(type);
      int p = s < tops ? static_cast<int>(s + 1)
                       : -static_cast<int>(s - tops + 1);
      throw std::invalid_argument("position " + std::to_string(p) +
                                  " is in no class");
    }
  }
  d.labels_ = std::move(labels);
  d.finish();
  return d;
}

void Diagram::finish() {
  // On entry class_of_ holds arbitrary ids indexing labels_.
  std::vector<std::uint32_t> renumber(labels_.size(), kUnassigned);
  std::vector<Ordinal> fresh;
  fresh.reserve(labels_.size());
  unsigned tops = top_count(type_);
  unsigned bottoms = bottom_count(type_);
  unsigned span = std::max(tops, bottoms);
  auto visit = [&](std::size_t s) {
    std::uint32_t& id = renumber[class_of_[s]];
    if (id == kUnassigned) {
      id = static_cast<std::uint32_t>(fresh.size());
      fresh.push_back(labels_[class_of_[s]]);
    }
  };
  for (unsigned k = 0; k < span; ++k) {
    if (k < tops) {
      visit(k);
    }
    if (k < bottoms) {
      visit(tops + k);
    }
  }
  for (auto& c : class_of_) {
    c = renumber[c];
  }
  labels_ = std::move(fresh);

  std::size_t h = (static_cast<std::size_t>(type_.src) << 20) ^ type_.tgt;
  for (auto c : class_of_) {
    h = h * 1000003u ^ c;
  }
  for (const auto& l : labels_) {
    h = h * 1000003u ^ l.hash();
  }
  hash_ = h;
}

std::size_t Diagram::class_of(int position) const {
  return class_of_[slot(position)];
}

std::vector<int> Diagram::positions(std::size_t cls) const {
  std::vector<int> out;
  unsigned tops = top_count(type_);
  for (std::size_t s = 0; s < class_of_.size(); ++s) {
    if (class_of_[s] == cls) {
      out.push_back(s < tops ? static_cast<int>(s + 1)
                             : -static_cast<int>(s - tops + 1));
    }
  }
  return out;
}

bool Diagram::is_even_class(std::size_t cls) const {
  for (std::size_t s = 0; s < class_of_.size(); ++s) {
    if (class_of_[s] == cls) {
      unsigned tops = top_count(type_);
      std::size_t mag = s < tops ? s + 1 : s - tops + 1;
      return mag % 2 == 0;
    }
  }
  throw std::out_of_range("no such class");
}

Diagram Diagram::with_labels(std::vector<Ordinal> labels) const {
  if (labels.size() != labels_.size()) {
    throw std::invalid_argument("one label per class expected");
  }
  Diagram d = *this;
  d.labels_ = std::move(labels);
  d.finish();
  return d;
}

bool operator==(const Diagram& a, const Diagram& b) noexcept {
  return a.hash_ == b.hash_ && a.type_ == b.type_ &&
         a.class_of_ == b.class_of_ && a.labels_ == b.labels_;
}

// ---------------------------------------------------------------------------
// Generators

Diagram generator_diagram(const GeneratorSymbol& g) {
  if (g.index == 0) {
    throw std::invalid_argument("generator index must be at least 1");
  }
  unsigned n = (g.index - 1) / 2;
  bool odd = g.index % 2 == 1;
  std::vector<std::vector<int>> classes;
  std::vector<Ordinal> labels;
  auto straight = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i) {
      classes.push_back({i, -i});
      labels.emplace_back();
    }
  };
  int w = static_cast<int>(2 * n);

  if (g.family == GenFamily::c) {
    unsigned size = odd ? n : n + 1;
    Diagram id = Diagram::identity(size);
    std::vector<Ordinal> ls(id.class_count());
    ls[id.class_of(static_cast<int>(g.index))] = g.label;
    return id.with_labels(std::move(ls));
  }

  ArrowType type;
  straight(1, w);
  if (odd) {
    type = {n + 1, n};
    classes.push_back({w + 2});
    labels.push_back(g.label);
    classes.push_back({w + 1, w + 3, -(w + 1)});
    labels.emplace_back();
  } else {
    type = {n + 2, n + 1};
    classes.push_back({w + 1, -(w + 1)});
    labels.emplace_back();
    classes.push_back({w + 2, w + 4, -(w + 2)});
    labels.emplace_back();
    classes.push_back({w + 3});
    labels.push_back(g.label);
    classes.push_back({w + 5, -(w + 3)});
    labels.emplace_back();
  }
  Diagram cap = Diagram::from_classes(type, classes, std::move(labels));
  return g.family == GenFamily::a ? cap : mirror(cap);
}

// ---------------------------------------------------------------------------
// Composition and padding

Diagram compose(const Diagram& g, const Diagram& f) {
  if (f.type_.tgt != g.type_.src) {
    throw TypeError("cannot compose diagram of type " + to_string(g.type_) +
                    " after diagram of type " + to_string(f.type_));
  }
  const std::size_t cf = f.class_count();
  const std::size_t total = cf + g.class_count();
  const unsigned f_tops = top_count(f.type_);
  const unsigned middle = bottom_count(f.type_);
  const unsigned g_tops = top_count(g.type_);
  const unsigned g_bottoms = bottom_count(g.type_);

  // Middle magnitude j sits at f-slot f_tops + j - 1 and g-slot j - 1.
  DisjointSets sets(total);
  for (unsigned j = 0; j < middle; ++j) {
    sets.unite(f.class_of_[f_tops + j], cf + g.class_of_[j]);
  }

  std::vector<std::vector<Ordinal>> parts(total);
  for (std::size_t c = 0; c < total; ++c) {
    const Ordinal& l = c < cf ? f.labels_[c] : g.labels_[c - cf];
    if (!l.is_zero()) {
      parts[sets.find(c)].push_back(l);
    }
  }
  std::vector<Ordinal> content(total);
  for (std::size_t r = 0; r < total; ++r) {
    if (!parts[r].empty()) {
      content[r] = nat_sum(parts[r]);
    }
  }

  std::vector<char> open(total, 0);
  for (unsigned s = 0; s < f_tops; ++s) {
    open[sets.find(f.class_of_[s])] = 1;
  }
  for (unsigned s = 0; s < g_bottoms; ++s) {
    open[sets.find(cf + g.class_of_[g_tops + s])] = 1;
  }

  // Spans of closed components over middle magnitudes (0-based here).
  std::vector<unsigned> lo(total, middle), hi(total, 0);
  std::vector<std::size_t> middle_root(middle);
  for (unsigned j = 0; j < middle; ++j) {
    std::size_t r = sets.find(f.class_of_[f_tops + j]);
    middle_root[j] = r;
    lo[r] = std::min(lo[r], j);
    hi[r] = std::max(hi[r], j);
  }
  std::vector<std::size_t> closed;
  for (unsigned j = 0; j < middle; ++j) {
    std::size_t r = middle_root[j];
    if (!open[r] && lo[r] == j) {
      closed.push_back(r);
    }
  }
  std::stable_sort(closed.begin(), closed.end(),
                   [&](std::size_t a, std::size_t b) {
                     return hi[a] - lo[a] < hi[b] - lo[b];
                   });
  for (std::size_t r : closed) {
    if (lo[r] == 0 || hi[r] + 1 >= middle) {
      throw std::logic_error("closed component touches the boundary gap");
    }
    std::size_t outside = middle_root[hi[r] + 1];
    if (outside != middle_root[lo[r] - 1]) {
      throw std::logic_error("closed component has inconsistent enclosure");
    }
    content[outside] = nat_sum(content[outside], omega_pow(content[r]));
  }

  Diagram out(ArrowType{f.type_.src, g.type_.tgt});
  out.class_of_.resize(f_tops + g_bottoms);
  for (unsigned s = 0; s < f_tops; ++s) {
    out.class_of_[s] = static_cast<std::uint32_t>(sets.find(f.class_of_[s]));
  }
  for (unsigned s = 0; s < g_bottoms; ++s) {
    out.class_of_[f_tops + s] =
        static_cast<std::uint32_t>(sets.find(cf + g.class_of_[g_tops + s]));
  }
  out.labels_ = std::move(content);
  out.finish();

  if (out.class_of_[0] != out.class_of_[f_tops] ||
      out.class_of_[f_tops - 1] != out.class_of_.back()) {
    throw std::logic_error("composite lost its boundary gaps");
  }
  std::vector<int> parity(out.labels_.size(), -1);
  for (std::size_t s = 0; s < out.class_of_.size(); ++s) {
    int p = static_cast<int>((s < f_tops ? s : s - f_tops) % 2);
    int& seen = parity[out.class_of_[s]];
    if (seen >= 0 && seen != p) {
      throw std::logic_error("composite has a class of mixed parity");
    }
    seen = p;
  }
  return out;
}

Diagram pad_high(const Diagram& d, unsigned n) {
  if (n == 0) {
    return d;
  }
  const unsigned tops = top_count(d.type_);
  const auto base = static_cast<std::uint32_t>(d.class_count());
  Diagram out(ArrowType{d.type_.src + n, d.type_.tgt + n});
  out.class_of_.reserve(d.class_of_.size() + 4 * n);
  out.class_of_.insert(out.class_of_.end(), d.class_of_.begin(),
                       d.class_of_.begin() + tops);
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    out.class_of_.push_back(base + i);
  }
  out.class_of_.insert(out.class_of_.end(), d.class_of_.begin() + tops,
                       d.class_of_.end());
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    out.class_of_.push_back(base + i);
  }
  out.labels_ = d.labels_;
  out.labels_.resize(base + 2 * n);
  out.finish();
  return out;
}

Diagram pad_low(const Diagram& d, unsigned n) {
  if (n == 0) {
    return d;
  }
  const unsigned tops = top_count(d.type_);
  const auto base = static_cast<std::uint32_t>(d.class_count());
  Diagram out(ArrowType{d.type_.src + n, d.type_.tgt + n});
  out.class_of_.reserve(d.class_of_.size() + 4 * n);
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    out.class_of_.push_back(base + i);
  }
  out.class_of_.insert(out.class_of_.end(), d.class_of_.begin(),
                       d.class_of_.begin() + tops);
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    out.class_of_.push_back(base + i);
  }
  out.class_of_.insert(out.class_of_.end(), d.class_of_.begin() + tops,
                       d.class_of_.end());
  out.labels_ = d.labels_;
  out.labels_.resize(base + 2 * n);
  out.finish();
  return out;
}

Diagram mirror(const Diagram& d) {
  const unsigned tops = top_count(d.type_);
  Diagram out(ArrowType{d.type_.tgt, d.type_.src});
  out.class_of_.reserve(d.class_of_.size());
  out.class_of_.insert(out.class_of_.end(), d.class_of_.begin() + tops,
                       d.class_of_.end());
  out.class_of_.insert(out.class_of_.end(), d.class_of_.begin(),
                       d.class_of_.begin() + tops);
  out.labels_ = d.labels_;
  out.finish();
  return out;
}

Diagram eval_frob(const FrobTerm& t) {
  using G = FrobLang::Gen;
  switch (t.kind()) {
    case TermKind::id:
      return Diagram::identity(t.index());
    case TermKind::gen: {
      unsigned n = t.index();
      switch (t.gen()) {
        case G::eps_box:
          return generator_diagram({GenFamily::a, 2 * n + 1, {}});
        case G::delta_dia:
          return generator_diagram({GenFamily::a, 2 * n + 2, {}});
        case G::eps_dia:
          return generator_diagram({GenFamily::b, 2 * n + 1, {}});
        case G::delta_box:
          return generator_diagram({GenFamily::b, 2 * n + 2, {}});
      }
      break;
    }
    case TermKind::compose:
      return compose(eval_frob(t.outer()), eval_frob(t.inner()));
    case TermKind::apply:
      return pad_high(eval_frob(t.inner()), 1);
  }
  throw TypeError("corrupt term");
}

bool equal_diagrams(const Diagram& a, const Diagram& b) { return a == b; }

bool equal_up_to_pad(const Diagram& a, const Diagram& b) {
  ArrowType ta = a.type();
  ArrowType tb = b.type();
  if (static_cast<long>(ta.src) - static_cast<long>(ta.tgt) !=
      static_cast<long>(tb.src) - static_cast<long>(tb.tgt)) {
    return false;
  }
  if (ta.src <= tb.src) {
    return pad_high(a, tb.src - ta.src) == b;
  }
  return pad_high(b, ta.src - tb.src) == a;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

bool intersects(int a, int b, int c, int d) {
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::string class_text(const std::vector<int>& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += (cls[i] > 0 ? "+" : "") + std::to_string(cls[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<std::string> check_invariants(const Diagram& d) {
  std::vector<std::string> out;
  const std::size_t count = d.class_count();
  std::vector<std::vector<int>> cls(count);
  for (std::size_t c = 0; c < count; ++c) {
    cls[c] = d.positions(c);
  }

  std::vector<int> parity(count, 0);
  for (std::size_t c = 0; c < count; ++c) {
    bool even = magnitude(cls[c].front()) % 2 == 0;
    parity[c] = even ? 0 : 1;
    for (int p : cls[c]) {
      if ((magnitude(p) % 2 == 0) != even) {
        out.push_back("class " + class_text(cls[c]) + " mixes parities");
        parity[c] = -1;
        break;
      }
    }
  }

  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = x + 1; y < count; ++y) {
      bool crossing = false;
      for (int a : cls[x]) {
        for (int b : cls[x]) {
          for (int c : cls[y]) {
            for (int e : cls[y]) {
              crossing = crossing || intersects(a, b, c, e);
            }
          }
        }
      }
      if (crossing) {
        out.push_back("classes " + class_text(cls[x]) + " and " +
                      class_text(cls[y]) + " intersect");
      }
    }
  }

  // Neighbours: no third class crosses the interval between any a in A and
  // any b in B.
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = x + 1; y < count; ++y) {
      if (parity[x] < 0 || parity[x] != parity[y]) {
        continue;
      }
      bool separated = false;
      for (int a : cls[x]) {
        for (int b : cls[y]) {
          int lo = std::min(a, b);
          int hi = std::max(a, b);
          for (std::size_t z = 0; z < count && !separated; ++z) {
            if (z == x || z == y) {
              continue;
            }
            for (int c1 : cls[z]) {
              for (int c2 : cls[z]) {
                separated = separated || intersects(lo, hi, c1, c2);
              }
            }
          }
        }
      }
      if (!separated) {
        out.push_back("classes " + class_text(cls[x]) + " and " +
                      class_text(cls[y]) + " are immediate neighbours");
      }
    }
  }

  ArrowType t = d.type();
  int right_top = static_cast<int>(2 * t.src + 1);
  int right_bottom = -static_cast<int>(2 * t.tgt + 1);
  if (d.class_of(1) != d.class_of(-1)) {
    out.push_back("positions +1 and -1 are in different classes");
  }
  if (d.class_of(right_top) != d.class_of(right_bottom)) {
    out.push_back("positions +" + std::to_string(right_top) + " and " +
                  std::to_string(right_bottom) + " are in different classes");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string class_tag(std::size_t c) {
  if (c < 26) {
    return std::string(1, static_cast<char>('A' + c));
  }
  if (c < 52) {
    return std::string(1, static_cast<char>('a' + (c - 26)));
  }
  return "c" + std::to_string(c);
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) {
    s.append(width - s.size(), ' ');
  }
  return s;
}

std::string position_text(int p) {
  return (p > 0 ? "+" : "") + std::to_string(p);
}

std::string render_ascii(const Diagram& d) {
  ArrowType t = d.type();
  unsigned tops = 2 * t.src + 1;
  unsigned bottoms = 2 * t.tgt + 1;
  unsigned span = std::max(tops, bottoms);
  std::size_t width = std::to_string(span).size() + 2;
  if (d.class_count() > 26) {
    width = std::max(width, class_tag(d.class_count() - 1).size() + 1);
  }

  std::string top_pos = "top     ";
  std::string top_cls = "        ";
  std::string links = "        ";
  std::string bot_cls = "        ";
  std::string bot_pos = "bottom  ";
  for (unsigned k = 1; k <= span; ++k) {
    int ki = static_cast<int>(k);
    bool has_top = k <= tops;
    bool has_bottom = k <= bottoms;
    top_pos += pad_right(has_top ? position_text(ki) : "", width);
    top_cls += pad_right(has_top ? class_tag(d.class_of(ki)) : "", width);
    bot_cls += pad_right(has_bottom ? class_tag(d.class_of(-ki)) : "", width);
    bot_pos += pad_right(has_bottom ? position_text(-ki) : "", width);
    bool through = has_top && has_bottom && d.class_of(ki) == d.class_of(-ki);
    links += pad_right(through ? "|" : "", width);
  }
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') {
      s.pop_back();
    }
    return s;
  };
  std::ostringstream os;
  os << "type: " << to_string(t) << '\n'
     << trim(top_pos) << '\n'
     << trim(top_cls) << '\n'
     << trim(links) << '\n'
     << trim(bot_cls) << '\n'
     << trim(bot_pos);
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    os << '\n'
       << class_tag(c) << ' ' << (d.is_even_class(c) ? "wire" : "gap ");
    for (int p : d.positions(c)) {
      os << ' ' << position_text(p);
    }
    if (!d.label(c).is_zero()) {
      os << " : " << to_string(d.label(c));
    }
  }
  return os.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string render_svg(const Diagram& d) {
  constexpr int kStep = 40;
  constexpr int kTop = 30;
  constexpr int kBottom = 150;
  ArrowType t = d.type();
  int span = static_cast<int>(std::max(2 * t.src + 1, 2 * t.tgt + 1));
  int width = kStep * (span + 1);
  int height = kBottom + 30;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    auto ps = d.positions(c);
    bool top = false;
    bool bottom = false;
    int sum = 0;
    for (int p : ps) {
      (p > 0 ? top : bottom) = true;
      sum += magnitude(p) * kStep;
    }
    int ax = sum / static_cast<int>(ps.size());
    int ay = top && bottom ? (kTop + kBottom) / 2
             : top        ? kTop + 40
                          : kBottom - 40;
    bool even = d.is_even_class(c);
    os << "  <g class=\"" << (even ? "wire" : "gap") << "\">\n";
    for (int p : ps) {
      int x = magnitude(p) * kStep;
      int y = p > 0 ? kTop : kBottom;
      os << "    <path d=\"M " << x << ' ' << y << " Q " << x << ' ' << ay
         << ' ' << ax << ' ' << ay << "\" fill=\"none\" stroke=\""
         << (even ? "black" : "#9a9a9a") << "\" stroke-width=\""
         << (even ? 3 : 1) << "\"" << (even ? "" : " stroke-dasharray=\"4 3\"")
         << "/>\n";
    }
    if (!d.label(c).is_zero()) {
      os << "    <text x=\"" << ax << "\" y=\"" << ay - 4
         << "\" font-family=\"monospace\" font-size=\"12\" "
            "text-anchor=\"middle\">"
         << xml_escape(to_string(d.label(c))) << "</text>\n";
    }
    os << "  </g>\n";
  }
  for (int k = 1; k <= span; ++k) {
    if (k <= static_cast<int>(2 * t.src + 1)) {
      os << "  <text x=\"" << k * kStep << "\" y=\"" << kTop - 10
         << "\" font-family=\"monospace\" font-size=\"10\" "
            "text-anchor=\"middle\">+"
         << k << "</text>\n";
    }
    if (k <= static_cast<int>(2 * t.tgt + 1)) {
      os << "  <text x=\"" << k * kStep << "\" y=\"" << kBottom + 20
         << "\" font-family=\"monospace\" font-size=\"10\" "
            "text-anchor=\"middle\">-"
         << k << "</text>\n";
    }
  }
  os << "</svg>";
  return os.str();
}

}  // namespace

std::string render(const Diagram& d, RenderFormat format) {
  return format == RenderFormat::svg ? render_svg(d) : render_ascii(d);
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize(const Diagram& d) {
  std::string out = "type: " + to_string(d.type());
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    out += "\nclass:";
    for (int p : d.positions(c)) {
      out += ' ';
      out += position_text(p);
    }
    if (!d.label(c).is_zero()) {
      out += " : " + to_string(d.label(c));
    }
  }
  return out;
}

namespace {

class DiagramReader {
 public:
  explicit DiagramReader(std::string_view text) : text_(text) {}

  Diagram read() {
    skip_blank_lines();
    expect_word("type:");
    unsigned src = natural();
    skip_spaces();
    if (text_.substr(pos_, 2) != "->") {
      throw ParseError(pos_, "expected '->'");
    }
    pos_ += 2;
    unsigned tgt = natural();
    end_of_line();

    std::vector<std::vector<int>> classes;
    std::vector<Ordinal> labels;
    for (skip_blank_lines(); pos_ < text_.size(); skip_blank_lines()) {
      expect_word("class:");
      std::vector<int> cls;
      for (;;) {
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] == '\n' ||
            text_[pos_] == ':') {
          break;
        }
        cls.push_back(signed_position());
      }
      if (cls.empty()) {
        throw ParseError(pos_, "class without positions");
      }
      Ordinal label;
      if (pos_ < text_.size() && text_[pos_] == ':') {
        ++pos_;
        std::size_t start = pos_;
        std::size_t stop = text_.find('\n', pos_);
        if (stop == std::string_view::npos) {
          stop = text_.size();
        }
        try {
          label = parse_ordinal(text_.substr(start, stop - start));
        } catch (const ParseError& e) {
          throw ParseError(start + e.position(), "bad label");
        }
        pos_ = stop;
      }
      end_of_line();
      classes.push_back(std::move(cls));
      labels.push_back(std::move(label));
    }

    Diagram d;
    try {
      d = Diagram::from_classes({src, tgt}, classes, std::move(labels));
    } catch (const std::invalid_argument& e) {
      throw ParseError(text_.size(), e.what());
    }
    auto problems = check_invariants(d);
    if (!problems.empty()) {
      throw ParseError(text_.size(), "not a Frobenius split equivalence: " +
                                         problems.front());
    }
    return d;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void skip_blank_lines() {
    for (;;) {
      std::size_t save = pos_;
      skip_spaces();
      if (pos_ < text_.size() && text_[pos_] == '\n') {
        ++pos_;
        continue;
      }
      pos_ = save;
      skip_spaces();
      return;
    }
  }

  void end_of_line() {
    skip_spaces();
    if (pos_ < text_.size()) {
      if (text_[pos_] != '\n') {
        throw ParseError(pos_, "unexpected text at end of line");
      }
      ++pos_;
    }
  }

  void expect_word(std::string_view w) {
    skip_spaces();
    if (text_.substr(pos_, w.size()) != w) {
      throw ParseError(pos_, "expected '" + std::string(w) + "'");
    }
    pos_ += w.size();
  }

  unsigned natural() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      throw ParseError(pos_, "expected a natural number");
    }
    if (pos_ - start > 6) {
      throw ParseError(start, "number too large");
    }
    return static_cast<unsigned>(
        std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  int signed_position() {
    if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) {
      throw ParseError(pos_, "expected a signed position");
    }
    bool negative = text_[pos_] == '-';
    ++pos_;
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, "expected digits");
    }
    unsigned value = natural();
    if (value == 0) {
      throw ParseError(pos_, "position 0 does not exist");
    }
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_diagram(std::string_view text) {
  return DiagramReader(text).read();
}

}  // namespace frobcalc
