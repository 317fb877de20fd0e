#include "frobcalc/prover.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "frobcalc/error.hpp"

namespace frobcalc {

using G = FrobLang::Gen;

ArrowType step_type(const SpineStep& s) {
  ArrowType t = *FrobLang::gen_type(s.gen, s.sub);
  return {t.src + s.lift, t.tgt + s.lift};
}

ArrowType type_of(const Spine& s) {
  unsigned obj = s.source;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    ArrowType t = step_type(s.steps[i]);
    if (t.src != obj) {
      throw TypeError("spine step " + std::to_string(i) + " expects object " +
                      std::to_string(t.src) + " but receives " +
                      std::to_string(obj));
    }
    obj = t.tgt;
  }
  return {s.source, obj};
}

namespace {

void flatten(const FrobTerm& t, unsigned lift, std::vector<SpineStep>& out) {
  switch (t.kind()) {
    case TermKind::id:
      return;
    case TermKind::gen:
      out.push_back({t.gen(), t.index(), lift});
      return;
    case TermKind::compose:
      flatten(t.inner(), lift, out);
      flatten(t.outer(), lift, out);
      return;
    case TermKind::apply:
      flatten(t.inner(), lift + 1, out);
      return;
  }
}

FrobTerm step_term(const SpineStep& s) {
  return frob::lift(FrobTerm::generator(s.gen, s.sub), s.lift);
}

}  // namespace

Spine spine_of(const FrobTerm& t) {
  Spine s;
  s.source = type_of(t).src;
  flatten(t, 0, s.steps);
  return s;
}

FrobTerm term_of(const Spine& s) {
  if (s.steps.empty()) {
    return FrobTerm::identity(s.source);
  }
  FrobTerm t = step_term(s.steps.front());
  for (std::size_t i = 1; i < s.steps.size(); ++i) {
    t = FrobTerm::compose(step_term(s.steps[i]), t);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class SpineEnumerator {
 public:
  SpineEnumerator(unsigned max_object,
                  const std::function<bool(const Spine&)>& visit)
      : visit_(visit) {
    for (G g : {G::eps_box, G::eps_dia, G::delta_box, G::delta_dia}) {
      for (unsigned sub = 0; sub <= max_object; ++sub) {
        for (unsigned lift = 0; sub + lift <= max_object; ++lift) {
          atoms_.push_back({g, sub, lift});
        }
      }
    }
  }

  bool run(unsigned size) {
    spine_.steps.clear();
    for (const auto& a : atoms_) {
      spine_.source = step_type(a).src;
      spine_.steps.push_back(a);
      bool go = extend(size - 1, step_type(a).tgt);
      spine_.steps.pop_back();
      if (!go) {
        return false;
      }
    }
    return true;
  }

 private:
  bool extend(unsigned remaining, unsigned obj) {
    if (remaining == 0) {
      return visit_(spine_);
    }
    for (const auto& a : atoms_) {
      ArrowType t = step_type(a);
      if (t.src != obj) {
        continue;
      }
      spine_.steps.push_back(a);
      bool go = extend(remaining - 1, t.tgt);
      spine_.steps.pop_back();
      if (!go) {
        return false;
      }
    }
    return true;
  }

  const std::function<bool(const Spine&)>& visit_;
  std::vector<SpineStep> atoms_;
  Spine spine_;
};

}  // namespace

void for_each_spine(unsigned max_size, unsigned max_object,
                    const std::function<bool(const Spine&)>& visit) {
  for (unsigned n = 0; n <= max_object; ++n) {
    if (!visit(Spine{n, {}})) {
      return;
    }
  }
  SpineEnumerator e(max_object, visit);
  for (unsigned size = 1; size <= max_size; ++size) {
    if (!e.run(size)) {
      return;
    }
  }
}

std::vector<FrobTerm> enumerate_terms(unsigned max_size, unsigned max_object) {
  std::vector<FrobTerm> out;
  for_each_spine(max_size, max_object, [&](const Spine& s) {
    out.push_back(term_of(s));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Rules

namespace {

// A pattern step: generator with subscript n + dsub at level j + dlift.
struct PatternStep {
  G gen;
  unsigned dsub;
  unsigned dlift;
};

using Pattern = std::vector<PatternStep>;

struct Rule {
  std::string name;
  Pattern left;
  Pattern right;
};

Pattern phi_pattern(unsigned k, unsigned dsub, unsigned dlift) {
  Pattern p{{G::eps_dia, dsub, dlift}};
  for (unsigned i = 0; i < k; ++i) {
    p.push_back({G::delta_box, dsub + i, dlift});
  }
  for (unsigned i = k; i-- > 0;) {
    p.push_back({G::delta_dia, dsub + i, dlift});
  }
  p.push_back({G::eps_box, dsub, dlift});
  return p;
}

std::vector<Rule> make_rules(Theory th) {
  std::vector<Rule> rules = {
      {"delta-box", {{G::delta_box, 0, 0}, {G::delta_box, 0, 1}},
       {{G::delta_box, 0, 0}, {G::delta_box, 1, 0}}},
      {"delta-dia", {{G::delta_dia, 0, 1}, {G::delta_dia, 0, 0}},
       {{G::delta_dia, 1, 0}, {G::delta_dia, 0, 0}}},
      {"box-beta", {{G::delta_box, 0, 0}, {G::eps_box, 1, 0}}, {}},
      {"dia-beta", {{G::eps_dia, 1, 0}, {G::delta_dia, 0, 0}}, {}},
      {"box-eta", {{G::delta_box, 0, 0}, {G::eps_box, 0, 1}}, {}},
      {"dia-eta", {{G::eps_dia, 0, 1}, {G::delta_dia, 0, 0}}, {}},
      {"frobenius-1", {{G::delta_box, 1, 0}, {G::delta_dia, 0, 1}},
       {{G::delta_dia, 0, 0}, {G::delta_box, 0, 0}}},
      {"frobenius-2", {{G::delta_box, 0, 1}, {G::delta_dia, 1, 0}},
       {{G::delta_dia, 0, 0}, {G::delta_box, 0, 0}}},
      {"frobenius-3", {{G::delta_box, 1, 0}, {G::delta_dia, 0, 1}},
       {{G::delta_box, 0, 1}, {G::delta_dia, 1, 0}}},
  };
  if (th == Theory::frob_sep || th == Theory::sep_matrix) {
    rules.push_back({"sep", {{G::delta_box, 0, 0}, {G::delta_dia, 0, 0}}, {}});
  }
  if (th == Theory::frob_phi || th == Theory::sep_matrix) {
    for (unsigned k = 0; k <= 3; ++k) {
      rules.push_back({"phi-" + std::to_string(k), phi_pattern(k, 1, 0),
                       phi_pattern(k, 0, 1)});
    }
  }
  return rules;
}

const std::vector<Rule>& rules_for(Theory th) {
  static const std::array<std::vector<Rule>, 4> all = {
      make_rules(Theory::frob), make_rules(Theory::frob_phi),
      make_rules(Theory::frob_sep), make_rules(Theory::sep_matrix)};
  return all[static_cast<std::size_t>(th)];
}

// Source object of a pattern instantiated at n = 0, j = 0.
unsigned pattern_source(const Pattern& p) {
  ArrowType t = *FrobLang::gen_type(p.front().gen, p.front().dsub);
  return t.src + p.front().dlift;
}

// Emits a candidate spine built from `steps` when it respects the limits.
class MoveSink {
 public:
  MoveSink(const Spine& s, const MoveLimits& limits,
           const std::function<void(RewriteMove&&)>& emit)
      : spine_(s), limits_(limits), emit_(emit) {}

  void offer(const std::string& rule, bool forward, std::size_t pos,
             std::size_t erase, const std::vector<SpineStep>& insert) {
    std::size_t length = spine_.steps.size() - erase + insert.size();
    if (length > limits_.max_length) {
      return;
    }
    if (!limits_.insertions && insert.size() > erase) {
      return;
    }
    Spine out;
    out.source = spine_.source;
    out.steps.reserve(length);
    out.steps.insert(out.steps.end(), spine_.steps.begin(),
                     spine_.steps.begin() + static_cast<long>(pos));
    out.steps.insert(out.steps.end(), insert.begin(), insert.end());
    out.steps.insert(out.steps.end(),
                     spine_.steps.begin() + static_cast<long>(pos + erase),
                     spine_.steps.end());
    unsigned obj = out.source;
    for (const auto& st : out.steps) {
      obj = step_type(st).tgt;
      if (obj > limits_.max_object) {
        return;
      }
    }
    emit_(RewriteMove{rule, forward, pos, std::move(out)});
  }

 private:
  const Spine& spine_;
  const MoveLimits& limits_;
  const std::function<void(RewriteMove&&)>& emit_;
};

std::optional<std::pair<unsigned, unsigned>> match_at(
    const std::vector<SpineStep>& steps, std::size_t pos, const Pattern& p) {
  if (p.empty() || pos + p.size() > steps.size()) {
    return std::nullopt;
  }
  const SpineStep& first = steps[pos];
  if (first.gen != p.front().gen || first.sub < p.front().dsub ||
      first.lift < p.front().dlift) {
    return std::nullopt;
  }
  unsigned n = first.sub - p.front().dsub;
  unsigned j = first.lift - p.front().dlift;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const SpineStep& s = steps[pos + i];
    if (s.gen != p[i].gen || s.sub != n + p[i].dsub ||
        s.lift != j + p[i].dlift) {
      return std::nullopt;
    }
  }
  return std::make_pair(n, j);
}

std::vector<SpineStep> instantiate(const Pattern& p, unsigned n, unsigned j) {
  std::vector<SpineStep> out;
  out.reserve(p.size());
  for (const auto& ps : p) {
    out.push_back({ps.gen, n + ps.dsub, j + ps.dlift});
  }
  return out;
}

void apply_equation(const Rule& rule, bool forward, const Spine& s,
                    const std::vector<unsigned>& objects, MoveSink& sink) {
  const Pattern& from = forward ? rule.left : rule.right;
  const Pattern& to = forward ? rule.right : rule.left;
  const auto& steps = s.steps;
  if (from.empty()) {
    unsigned base = pattern_source(to);
    for (std::size_t pos = 0; pos <= steps.size(); ++pos) {
      unsigned obj = objects[pos];
      if (obj < base) {
        continue;
      }
      for (unsigned n = 0; n <= obj - base; ++n) {
        sink.offer(rule.name, forward, pos, 0,
                   instantiate(to, n, obj - base - n));
      }
    }
    return;
  }
  for (std::size_t pos = 0; pos + from.size() <= steps.size(); ++pos) {
    if (auto m = match_at(steps, pos, from)) {
      sink.offer(rule.name, forward, pos, from.size(),
                 instantiate(to, m->first, m->second));
    }
  }
}

// Naturality: a generator at level j slides across an adjacent segment
// whose steps all sit at level j or higher.
struct Naturality {
  const char* name;
  G gen;
  bool gen_first_on_left;  // left side is [gen, segment]
  unsigned left_shift;     // segment lift offset on the left side
  unsigned right_shift;    // segment lift offset on the right side
};

// eb: [eb, S] = [S+1, eb]   ed: [S, ed] = [ed, S+1]
// db: [db, S+2] = [S+1, db] dd: [S+2, dd] = [dd, S+1]
constexpr std::array<Naturality, 4> kNaturality = {{
    {"eps-box-nat", G::eps_box, true, 0, 1},
    {"eps-dia-nat", G::eps_dia, false, 0, 1},
    {"delta-box-nat", G::delta_box, true, 2, 1},
    {"delta-dia-nat", G::delta_dia, false, 2, 1},
}};

void apply_naturality(const Naturality& nat, const Spine& s,
                      const std::vector<unsigned>& objects, MoveSink& sink) {
  const auto& steps = s.steps;
  const std::size_t len = steps.size();
  std::vector<SpineStep> insert;
  for (std::size_t g = 0; g < len; ++g) {
    const SpineStep& x = steps[g];
    if (x.gen != nat.gen) {
      continue;
    }
    const unsigned j = x.lift;
    for (int side = 0; side < 2; ++side) {
      // side 0: segment after the generator, side 1: before.
      bool gen_first = side == 0;
      bool forward = gen_first == nat.gen_first_on_left;
      unsigned from_shift = forward ? nat.left_shift : nat.right_shift;
      unsigned to_shift = forward ? nat.right_shift : nat.left_shift;
      for (std::size_t seg = 1;; ++seg) {
        if (gen_first ? g + seg >= len : seg > g) {
          break;
        }
        std::size_t lo = gen_first ? g + 1 : g - seg;
        const SpineStep& last = steps[gen_first ? g + seg : g - seg];
        if (last.lift < j + from_shift) {
          break;
        }
        std::size_t hi = lo + seg;  // segment is [lo, hi)
        insert.clear();
        // Object at either end of the segment once shifted.
        unsigned seg_src = objects[lo] - from_shift + to_shift;
        unsigned seg_tgt = objects[hi] - from_shift + to_shift;
        ArrowType gt0 = *FrobLang::gen_type(x.gen, 0);
        SpineStep moved = x;
        std::vector<SpineStep> shifted;
        shifted.reserve(seg);
        for (std::size_t i = lo; i < hi; ++i) {
          SpineStep st = steps[i];
          st.lift = st.lift - from_shift + to_shift;
          shifted.push_back(st);
        }
        if (gen_first) {
          // [gen, S] -> [S', gen']: gen' starts where S' ends.
          unsigned base = gt0.src + j;
          if (seg_tgt < base) {
            continue;
          }
          moved.sub = seg_tgt - base;
          insert = std::move(shifted);
          insert.push_back(moved);
        } else {
          // [S, gen] -> [gen', S']: gen' ends where S' starts.
          unsigned base = gt0.tgt + j;
          if (seg_src < base) {
            continue;
          }
          moved.sub = seg_src - base;
          insert.push_back(moved);
          insert.insert(insert.end(), shifted.begin(), shifted.end());
        }
        std::size_t start = gen_first ? g : lo;
        sink.offer(nat.name, forward, start, seg + 1, insert);
      }
    }
  }
}

void generate(const Spine& s, Theory th, const MoveLimits& limits,
              const std::function<void(RewriteMove&&)>& emit) {
  std::vector<unsigned> objects;
  objects.reserve(s.steps.size() + 1);
  objects.push_back(s.source);
  for (const auto& st : s.steps) {
    objects.push_back(step_type(st).tgt);
  }
  MoveSink sink(s, limits, emit);
  for (const auto& nat : kNaturality) {
    apply_naturality(nat, s, objects, sink);
  }
  for (const auto& rule : rules_for(th)) {
    apply_equation(rule, true, s, objects, sink);
    apply_equation(rule, false, s, objects, sink);
  }
}

}  // namespace

std::vector<RewriteMove> rewrite_moves(const Spine& s, Theory th,
                                       const MoveLimits& limits) {
  type_of(s);
  std::vector<RewriteMove> out;
  generate(s, th, limits, [&](RewriteMove&& m) { out.push_back(std::move(m)); });
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

using Key = std::u16string;

Key encode(const Spine& s) {
  Key k;
  k.reserve(s.steps.size() + 1);
  k.push_back(static_cast<char16_t>(s.source));
  for (const auto& st : s.steps) {
    if (st.sub > 127 || st.lift > 127) {
      throw ResourceError("subscript too large for the prover");
    }
    k.push_back(static_cast<char16_t>(static_cast<unsigned>(st.gen) |
                                      (st.sub << 2) | (st.lift << 9)));
  }
  return k;
}

Spine decode(const Key& k) {
  Spine s;
  s.source = k[0];
  s.steps.reserve(k.size() - 1);
  for (std::size_t i = 1; i < k.size(); ++i) {
    unsigned v = k[i];
    s.steps.push_back({static_cast<G>(v & 3u), (v >> 2) & 127u, v >> 9});
  }
  return s;
}

struct Node {
  std::uint32_t parent;
  std::uint32_t rule;  // index into the rule-name table
  std::uint32_t position;
  bool forward;
};

class Side {
 public:
  explicit Side(const Spine& root) {
    Key k = encode(root);
    nodes_.push_back({kRoot, 0, 0, true});
    keys_.push_back(k);
    index_.emplace(std::move(k), 0);
    frontier_.push_back(0);
  }

  static constexpr std::uint32_t kRoot = 0xffffffffu;

  std::vector<Node> nodes_;
  std::vector<Key> keys_;
  std::unordered_map<Key, std::uint32_t> index_;
  std::vector<std::uint32_t> frontier_;
  unsigned depth_ = 0;
};

class Search {
 public:
  Search(const Spine& a, const Spine& b, Theory th, const SearchOptions& opt,
         const MoveLimits& limits)
      : th_(th), options_(opt), limits_(limits), a_(a), b_(b) {}

  SearchResult run() {
    SearchResult result;
    if (a_.keys_[0] == b_.keys_[0]) {
      result.status = SearchResult::Status::found;
      return result;
    }
    while (a_.depth_ + b_.depth_ < options_.depth) {
      Side* grow = &a_;
      Side* other = &b_;
      if (a_.frontier_.empty() ||
          (!b_.frontier_.empty() &&
           b_.frontier_.size() < a_.frontier_.size())) {
        std::swap(grow, other);
      }
      if (grow->frontier_.empty()) {
        break;
      }
      std::vector<std::uint32_t> next;
      std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;
      bool capped = false;
      for (std::uint32_t idx : grow->frontier_) {
        Spine s = decode(grow->keys_[idx]);
        generate(s, th_, limits_, [&](RewriteMove&& m) {
          if (meet || capped) {
            return;
          }
          Key k = encode(m.result);
          if (grow->index_.count(k) != 0) {
            return;
          }
          auto id = static_cast<std::uint32_t>(grow->nodes_.size());
          grow->nodes_.push_back({idx, rule_id(m.rule),
                                  static_cast<std::uint32_t>(m.position),
                                  m.forward});
          grow->keys_.push_back(k);
          auto hit = other->index_.find(k);
          grow->index_.emplace(std::move(k), id);
          next.push_back(id);
          if (hit != other->index_.end()) {
            meet = grow == &a_ ? std::make_pair(id, hit->second)
                               : std::make_pair(hit->second, id);
          } else if (a_.nodes_.size() + b_.nodes_.size() > options_.node_cap) {
            capped = true;
          }
        });
        if (meet || capped) {
          break;
        }
      }
      ++grow->depth_;
      grow->frontier_ = std::move(next);
      if (meet) {
        result.status = SearchResult::Status::found;
        result.trace = trace(meet->first, meet->second);
        break;
      }
      if (capped) {
        result.status = SearchResult::Status::incomplete;
        break;
      }
    }
    result.nodes = a_.nodes_.size() + b_.nodes_.size();
    return result;
  }

 private:
  std::uint32_t rule_id(const std::string& name) {
    auto it = rule_ids_.find(name);
    if (it != rule_ids_.end()) {
      return it->second;
    }
    auto id = static_cast<std::uint32_t>(rule_names_.size());
    rule_names_.push_back(name);
    rule_ids_.emplace(name, id);
    return id;
  }

  std::vector<ProofStep> trace(std::uint32_t in_a, std::uint32_t in_b) {
    std::vector<ProofStep> steps;
    for (std::uint32_t i = in_a; a_.nodes_[i].parent != Side::kRoot;
         i = a_.nodes_[i].parent) {
      const Node& n = a_.nodes_[i];
      steps.push_back({rule_names_[n.rule], n.forward, n.position,
                       term_of(decode(a_.keys_[i]))});
    }
    std::reverse(steps.begin(), steps.end());
    for (std::uint32_t i = in_b; b_.nodes_[i].parent != Side::kRoot;
         i = b_.nodes_[i].parent) {
      const Node& n = b_.nodes_[i];
      steps.push_back({rule_names_[n.rule], !n.forward, n.position,
                       term_of(decode(b_.keys_[n.parent]))});
    }
    return steps;
  }

  Theory th_;
  SearchOptions options_;
  MoveLimits limits_;
  Side a_;
  Side b_;
  std::vector<std::string> rule_names_;
  std::unordered_map<std::string, std::uint32_t> rule_ids_;
};

unsigned max_object(const Spine& s) {
  unsigned m = s.source;
  for (const auto& st : s.steps) {
    m = std::max(m, step_type(st).tgt);
  }
  return m;
}

}  // namespace

SearchResult rewrite_search(const FrobTerm& t1, const FrobTerm& t2, Theory th,
                            const SearchOptions& options) {
  ArrowType ty1 = type_of(t1);
  ArrowType ty2 = type_of(t2);
  if (ty1 != ty2) {
    throw TypeError("rewrite_search: types differ, " + to_string(ty1) +
                    " versus " + to_string(ty2));
  }
  Spine a = spine_of(t1);
  Spine b = spine_of(t2);
  MoveLimits limits;
  limits.max_length =
      std::max(a.steps.size(), b.steps.size()) + options.length_slack;
  limits.max_object = std::max(max_object(a), max_object(b)) +
                      options.object_slack;

  bool incomplete = false;
  SearchResult result;
  for (bool insertions : {false, true}) {
    limits.insertions = insertions;
    result = Search(a, b, th, options, limits).run();
    if (result.status == SearchResult::Status::found) {
      break;
    }
    incomplete = incomplete ||
                 result.status == SearchResult::Status::incomplete;
  }
  if (result.status != SearchResult::Status::found && incomplete) {
    result.status = SearchResult::Status::incomplete;
  }
  result.start = term_of(a);
  return result;
}

std::string format_trace(const SearchResult& r) {
  std::ostringstream os;
  os << to_string(r.start);
  for (const auto& s : r.trace) {
    os << "\n= " << to_string(s.term) << "   [" << s.rule << ' '
       << (s.forward ? "->" : "<-") << " @" << s.position << ']';
  }
  return os.str();
}

}  // namespace frobcalc
