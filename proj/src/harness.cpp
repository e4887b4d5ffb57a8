#include "itsub/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "itsub/consistency.hpp"
#include "itsub/subtype.hpp"
#include "itsub/syntax.hpp"

namespace itsub {

std::vector<Ty> enumerate_universe(const UniverseSpec& spec) {
  std::vector<std::vector<Ty>> by_size(spec.max_size + 1);
  by_size[0].push_back(Ty::top());
  for (std::size_t i = 0; i < spec.atom_count; ++i) by_size[0].push_back(Ty::constant(i));
  for (std::size_t s = 1; s <= spec.max_size; ++s) {
    auto& level = by_size[s];
    for (std::size_t l = 0; l < s; ++l) {
      for (const Ty& a : by_size[l]) {
        for (const Ty& b : by_size[s - 1 - l]) {
          level.push_back(Ty::arrow(a, b));
          level.push_back(Ty::inter(a, b));
        }
      }
    }
    std::sort(level.begin(), level.end());
  }
  std::vector<Ty> out;
  for (auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

namespace {

// Plain modulo on the raw engine output: std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Ty random_node(std::mt19937_64& rng, std::size_t atom_count, std::size_t depth) {
  const std::uint64_t kind = depth == 0 ? 0 : pick(rng, 3);
  if (kind == 0) {
    const std::uint64_t a = pick(rng, atom_count + 1);
    return a == 0 ? Ty::top() : Ty::constant(a - 1);
  }
  Ty l = random_node(rng, atom_count, depth - 1);
  Ty r = random_node(rng, atom_count, depth - 1);
  return kind == 1 ? Ty::arrow(std::move(l), std::move(r)) : Ty::inter(std::move(l), std::move(r));
}

}  // namespace

Ty random_type(std::uint64_t seed, std::size_t atom_count, std::size_t max_depth) {
  std::mt19937_64 rng(seed);
  return random_node(rng, atom_count, max_depth);
}

std::uint64_t SuiteReport::failure_count() const {
  std::uint64_t n = 0;
  for (const auto& [name, tally] : properties) n += tally.failed;
  return n;
}

// ---------------------------------------------------------------------------
// Shared tables

namespace {

class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t cols) : words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
  }

  /// First column set in row a but not in row b.
  std::optional<std::size_t> first_not_subset(std::size_t a, std::size_t b) const {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t extra = bits_[a * words_ + w] & ~bits_[b * words_ + w];
      if (extra) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(extra));
    }
    return std::nullopt;
  }

  /// First column where row r differs from (row x & row y).
  std::optional<std::size_t> first_not_meet(std::size_t r, std::size_t x, std::size_t y) const {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t diff =
          bits_[r * words_ + w] ^ (bits_[x * words_ + w] & bits_[y * words_ + w]);
      if (diff) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(diff));
    }
    return std::nullopt;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0);
    return;
  }
  constexpr std::size_t kChunk = 8;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t begin; (begin = next.fetch_add(kChunk)) < n;)
          for (std::size_t i = begin; i < std::min(n, begin + kChunk); ++i) fn(i, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

struct Universe {
  std::vector<Ty> types;
  std::unordered_map<Ty, std::uint32_t, TyHash> index;
  // below.test(b, a) iff a <: b.
  std::optional<BitRows> below;
  std::vector<std::vector<std::uint32_t>> above;
  std::vector<std::vector<std::uint32_t>> under;
  // check_sub certificates for every pair, row-major (a, b).
  std::vector<std::optional<Derivation>> certificates;

  std::size_t size() const { return types.size(); }
  std::uint32_t at(const Ty& t) const {
    auto it = index.find(t);
    if (it == index.end()) throw std::logic_error("type outside the universe: " + print(t));
    return it->second;
  }
  bool sub(std::size_t a, std::size_t b) const { return below->test(b, a); }
};

}  // namespace

struct SuiteContext::Impl {
  std::vector<std::pair<UniverseSpec, std::unique_ptr<Universe>>> cache;

  Universe& get(const UniverseSpec& spec) {
    for (auto& [s, u] : cache)
      if (s == spec) return *u;
    auto u = std::make_unique<Universe>();
    u->types = enumerate_universe(spec);
    for (std::uint32_t i = 0; i < u->types.size(); ++i) u->index.emplace(u->types[i], i);
    cache.emplace_back(spec, std::move(u));
    return *cache.back().second;
  }

  Universe& with_table(const UniverseSpec& spec, unsigned jobs) {
    Universe& u = get(spec);
    if (u.below) return u;
    const std::size_t n = u.size();
    BitRows rows(n, n);
    parallel_for(n, jobs, [&](std::size_t b, std::size_t) {
      for (std::size_t a = 0; a < n; ++a)
        if (is_subtype(u.types[a], u.types[b])) rows.set(b, a);
    });
    u.below = std::move(rows);
    u.above.assign(n, {});
    u.under.assign(n, {});
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (u.sub(a, b)) {
          u.above[a].push_back(b);
          u.under[b].push_back(a);
        }
    return u;
  }

  Universe& with_certificates(const UniverseSpec& spec, unsigned jobs) {
    Universe& u = with_table(spec, jobs);
    if (!u.certificates.empty()) return u;
    const std::size_t n = u.size();
    std::vector<std::optional<Derivation>> certs(n * n);
    parallel_for(n, jobs, [&](std::size_t a, std::size_t) {
      for (std::uint32_t b : u.above[a]) certs[a * n + b] = check_sub(u.types[a], u.types[b]);
    });
    u.certificates = std::move(certs);
    return u;
  }
};

SuiteContext::SuiteContext() : impl_(std::make_unique<Impl>()) {}
SuiteContext::~SuiteContext() = default;

// ---------------------------------------------------------------------------
// Collecting results

namespace {

struct KeyedFailure {
  std::uint64_t phase;
  std::uint64_t key;
  std::uint64_t seq;
  SuiteFailure failure;
};

class Collector {
 public:
  Collector(const std::vector<std::string>& properties, std::size_t counters, std::size_t limit,
            std::uint64_t phase)
      : names_(&properties), tallies_(properties.size()), counters_(counters), limit_(limit), phase_(phase) {}

  void begin_case(std::uint64_t key) {
    ++cases_;
    key_ = key;
    seq_ = 0;
  }

  void count(std::size_t counter, std::uint64_t by = 1) { counters_[counter] += by; }

  template <typename Describe>
  bool check(std::size_t property, bool ok, Describe&& describe) {
    ++tallies_[property].checked;
    if (ok) return true;
    ++tallies_[property].failed;
    if (failures_.size() < limit_) {
      SuiteFailure f = describe();
      f.property = (*names_)[property];
      failures_.push_back({phase_, key_, seq_++, std::move(f)});
    }
    return false;
  }

  std::uint64_t cases_ = 0;
  const std::vector<std::string>* names_;
  std::vector<PropertyTally> tallies_;
  std::vector<std::uint64_t> counters_;
  std::vector<KeyedFailure> failures_;
  std::size_t limit_;
  std::uint64_t phase_;
  std::uint64_t key_ = 0;
  std::uint64_t seq_ = 0;
};

class Runner {
 public:
  Runner(std::string name, const SuiteOptions& options, std::vector<std::string> properties,
         std::vector<std::string> counters = {})
      : options_(options),
        properties_(std::move(properties)),
        counter_names_(std::move(counters)),
        tallies_(properties_.size()),
        counters_(counter_names_.size()),
        start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
  }

  /// Runs body(i, collector) for i in [0, n) across options.jobs workers.
  template <typename Body>
  void phase(std::size_t n, Body&& body) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options_.jobs, n));
    std::vector<Collector> collectors;
    for (std::size_t w = 0; w < workers; ++w)
      collectors.emplace_back(properties_, counter_names_.size(), options_.failure_limit, phases_);
    parallel_for(n, options_.jobs, [&](std::size_t i, std::size_t w) { body(i, collectors[w]); });
    for (auto& c : collectors) {
      report_.cases += c.cases_;
      for (std::size_t p = 0; p < tallies_.size(); ++p) {
        tallies_[p].checked += c.tallies_[p].checked;
        tallies_[p].failed += c.tallies_[p].failed;
      }
      for (std::size_t k = 0; k < counters_.size(); ++k) counters_[k] += c.counters_[k];
      for (auto& f : c.failures_) failures_.push_back(std::move(f));
    }
    ++phases_;
  }

  void set_counter(std::size_t counter, std::uint64_t value) { counters_[counter] = value; }

  SuiteReport finish() {
    std::sort(failures_.begin(), failures_.end(), [](const KeyedFailure& x, const KeyedFailure& y) {
      return std::tie(x.phase, x.key, x.seq) < std::tie(y.phase, y.key, y.seq);
    });
    if (failures_.size() > options_.failure_limit) failures_.resize(options_.failure_limit);
    for (auto& f : failures_) report_.failures.push_back(std::move(f.failure));
    for (std::size_t p = 0; p < properties_.size(); ++p) report_.properties[properties_[p]] = tallies_[p];
    for (std::size_t k = 0; k < counters_.size(); ++k) report_.counters[counter_names_[k]] = counters_[k];
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const SuiteOptions& options_;
  std::vector<std::string> properties_;
  std::vector<std::string> counter_names_;
  std::vector<PropertyTally> tallies_;
  std::vector<std::uint64_t> counters_;
  std::vector<KeyedFailure> failures_;
  std::uint64_t phases_ = 0;
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string judgement(const Ty& a, const Ty& b) { return print(a) + " <: " + print(b); }

std::string cert_text(const Derivation& d) {
  try {
    return derivation_to_json(d);
  } catch (const std::invalid_argument&) {
    return derivation_to_tree(d);
  }
}

std::string cert_text(const BcdDerivation& d) {
  try {
    return derivation_to_json(d);
  } catch (const std::invalid_argument&) {
    return derivation_to_tree(d);
  }
}

SuiteFailure failure(std::string inputs, std::string detail, std::string certificate = {}) {
  return SuiteFailure{{}, std::move(inputs), std::move(detail), std::move(certificate)};
}

bool all_of_parts(const Ty& a, bool (*pred)(const Ty&)) {
  for (const Ty& p : parts(a))
    if (!pred(p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Suites

SuiteReport suite_core(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kPartsAtomic, kPartsConcat, kDomCodDefined, kContainedRefl, kContainedTrans, kSizeDepth,
         kMeasureIrrefl, kMeasureTrans, kMeasureWellFounded };
  Runner run("core", o,
             {"parts_atomic", "parts_concat", "dom_cod_defined", "contained_reflexive",
              "contained_transitive", "size_depth", "measure_irreflexive", "measure_transitive",
              "measure_well_founded"});
  const Universe& p = ctx.get(o.pairs);
  run.phase(p.size(), [&](std::size_t i, Collector& c) {
    const Ty& a = p.types[i];
    c.begin_case(i);
    const auto ps = parts(a);
    c.check(kPartsAtomic, std::none_of(ps.begin(), ps.end(), [](const Ty& t) { return t.is_inter(); }),
            [&] { return failure(print(a), "parts contains an intersection"); });
    if (a.is_inter()) {
      auto expect = parts(a.left());
      auto right = parts(a.right());
      expect.insert(expect.end(), right.begin(), right.end());
      c.check(kPartsConcat, expect == ps, [&] { return failure(print(a), "parts is not left ++ right"); });
    }
    const bool all_arrows = std::all_of(ps.begin(), ps.end(), [](const Ty& t) { return t.is_arrow(); });
    c.check(kDomCodDefined, dom(a).has_value() == all_arrows && cod(a).has_value() == all_arrows,
            [&] { return failure(print(a), "dom/cod definedness disagrees with the parts"); });
    c.check(kContainedRefl, contained_in(a, a), [&] { return failure(print(a), "not contained in itself"); });
    // Oracle: count the composite nodes of the subterm list; the arrow
    // nesting depth is recomputed by a separate walk.
    const auto subs = subterms(a);
    const auto composite = static_cast<std::size_t>(
        std::count_if(subs.begin(), subs.end(), [](const Ty& t) { return !t.is_atom(); }));
    auto arrow_depth = [](const auto& self, const Ty& t) -> std::size_t {
      if (t.is_arrow()) return 1 + std::max(self(self, t.left()), self(self, t.right()));
      if (t.is_inter()) return std::max(self(self, t.left()), self(self, t.right()));
      return 0;
    };
    c.check(kSizeDepth, size(a) == composite && depth(a) == arrow_depth(arrow_depth, a),
            [&] { return failure(print(a), "size/depth disagree with a direct count"); });
  });

  // Containment is transitive on the triple universe.
  const Universe& t = ctx.get(o.triples);
  const std::size_t n = t.size();
  BitRows contained(n, n);  // contained.test(a, b) iff contained_in(a, b)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (contained_in(t.types[a], t.types[b])) contained.set(a, b);
  run.phase(n, [&](std::size_t a, Collector& c) {
    c.begin_case(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (!contained.test(a, b)) continue;
      auto bad = contained.first_not_subset(b, a);
      c.check(kContainedTrans, !bad, [&] {
        return failure(print(t.types[a]) + " , " + print(t.types[b]) + " , " + print(t.types[*bad]),
                       "a in b and b in c but not a in c");
      });
    }
  });

  // The measure only ever sees triples drawn from the pair universe; on that
  // finite set it must be a strict order with an acyclic graph.
  std::vector<MeasureTriple> ms;
  for (const Ty& x : p.types)
    for (const Ty& y : p.types) {
      MeasureTriple m = measure_of(x, y);
      if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
    }
  auto show = [](const MeasureTriple& m) {
    return "(" + std::to_string(m.depth_mid) + "," + std::to_string(m.size_mid) + "," +
           std::to_string(m.size_right) + ")";
  };
  run.phase(1, [&](std::size_t, Collector& c) {
    c.begin_case(0);
    const std::size_t k = ms.size();
    std::vector<std::size_t> indegree(k, 0);
    for (std::size_t x = 0; x < k; ++x) {
      c.check(kMeasureIrrefl, !measure_less(ms[x], ms[x]), [&] { return failure(show(ms[x]), "m << m"); });
      for (std::size_t y = 0; y < k; ++y) {
        if (!measure_less(ms[x], ms[y])) continue;
        ++indegree[y];
        for (std::size_t z = 0; z < k; ++z)
          if (measure_less(ms[y], ms[z]))
            c.check(kMeasureTrans, measure_less(ms[x], ms[z]), [&] {
              return failure(show(ms[x]) + " " + show(ms[y]) + " " + show(ms[z]), "not transitive");
            });
      }
    }
    // Layering: repeatedly peel off triples with nothing below them.
    std::vector<std::size_t> frontier;
    for (std::size_t x = 0; x < k; ++x)
      if (indegree[x] == 0) frontier.push_back(x);
    std::size_t peeled = 0;
    while (!frontier.empty()) {
      const std::size_t x = frontier.back();
      frontier.pop_back();
      ++peeled;
      for (std::size_t y = 0; y < k; ++y)
        if (measure_less(ms[x], ms[y]) && --indegree[y] == 0) frontier.push_back(y);
    }
    c.check(kMeasureWellFounded, peeled == k,
            [&] { return failure(std::to_string(k) + " triples", "descending cycle"); });
  });
  return run.finish();
}

SuiteReport suite_soundness(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kValidate, kEndpoints, kSubformula };
  enum { kDerivable };
  Runner run("soundness", o, {"validate", "endpoints", "subformula"}, {"derivable"});
  const Universe& u = ctx.get(o.pairs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Ty& b = u.types[j];
      c.begin_case(i * n + j);
      auto d = check_sub(a, b);
      if (!d) continue;
      c.count(kDerivable);
      auto r = validate(*d);
      c.check(kValidate, r.ok,
              [&] { return failure(judgement(a, b), r.path + ": " + r.reason, derivation_to_tree(*d)); });
      c.check(kEndpoints, d->lhs() == a && d->rhs() == b,
              [&] { return failure(judgement(a, b), "certificate proves a different judgement"); });
      c.check(kSubformula, check_subformula_conjunction(*d),
              [&] { return failure(judgement(a, b), "subformula conjunction fails", cert_text(*d)); });
    }
  });
  return run.finish();
}

SuiteReport suite_prop1(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kInversion };
  Runner run("prop1", o, {"containment_inversion"});
  const Universe& u = ctx.get(o.pairs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    if (!a.is_inter()) return;
    for (std::size_t j = 0; j < n; ++j) {
      const Ty& b = u.types[j];
      c.begin_case(i * n + j);
      if (!contained_in(a, b)) continue;
      c.check(kInversion, contained_in(a.left(), b) && contained_in(a.right(), b),
              [&] { return failure(print(a) + " in " + print(b), "a component is not contained"); });
    }
  });
  return run.finish();
}

SuiteReport suite_prop2(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kRefl, kReflCert, kInterInversion, kSplitCert, kPartMono, kPartCert, kContainedMono,
         kContainedCert };
  Runner run("prop2", o,
             {"reflexivity", "reflexivity_certificate", "inter_inversion", "split_certificate",
              "part_monotonicity", "part_certificate", "containment_monotonicity",
              "containment_certificate"});
  const Universe& u = ctx.with_table(o.pairs, o.jobs);
  const std::size_t n = u.size();

  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    c.begin_case(i);
    c.check(kRefl, u.sub(i, i), [&] { return failure(judgement(a, a), "not derivable"); });
    Derivation d = reflexivity(a);
    c.check(kReflCert, validate(d).ok && d.lhs() == a && d.rhs() == a,
            [&] { return failure(judgement(a, a), "reflexivity certificate invalid", cert_text(d)); });
  });

  // Per right side b: intersection inversion and part / containment
  // monotonicity are row inclusions of the subtype table.
  run.phase(n, [&](std::size_t j, Collector& c) {
    const Ty& b = u.types[j];
    c.begin_case(j);
    if (b.is_inter()) {
      const std::size_t l = u.at(b.left());
      const std::size_t r = u.at(b.right());
      auto bad = u.below->first_not_meet(j, l, r);
      c.check(kInterInversion, !bad, [&] {
        return failure(judgement(u.types[*bad], b), "A <: B & C disagrees with A <: B and A <: C");
      });
    }
    for (const Ty& part : parts(b)) {
      auto bad = u.below->first_not_subset(j, u.at(part));
      c.check(kPartMono, !bad, [&] {
        return failure(judgement(u.types[*bad], b) + " , part " + print(part), "A <: part fails");
      });
    }
    for (std::size_t k = 0; k < n; ++k) {
      const Ty& cty = u.types[k];
      if (!contained_in(cty, b)) continue;
      auto bad = u.below->first_not_subset(j, k);
      c.check(kContainedMono, !bad, [&] {
        return failure(judgement(u.types[*bad], b) + " , contained " + print(cty), "A <: C fails");
      });
      Derivation d = project_contained(reflexivity(b), cty);
      c.check(kContainedCert, validate(d).ok && d.lhs() == b && d.rhs() == cty,
              [&] { return failure(judgement(b, cty), "projected certificate invalid", cert_text(d)); });
    }
  });

  // Constructive halves on every derivable pair.
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    for (std::uint32_t j : u.above[i]) {
      const Ty& b = u.types[j];
      c.begin_case(i * n + j);
      Derivation d = *check_sub(a, b);
      if (b.is_inter()) {
        auto [l, r] = split_glb(d);
        c.check(kSplitCert,
                validate(l).ok && validate(r).ok && l.lhs() == a && r.lhs() == a && l.rhs() == b.left() &&
                    r.rhs() == b.right(),
                [&] { return failure(judgement(a, b), "split certificates invalid"); });
      }
      for (const Ty& part : parts(b)) {
        Derivation q = project_part(d, part);
        c.check(kPartCert, validate(q).ok && q.lhs() == a && q.rhs() == part,
                [&] { return failure(judgement(a, b) + " , part " + print(part), "projection invalid", cert_text(q)); });
      }
    }
  });
  return run.finish();
}

SuiteReport suite_prop3(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kCod, kPart, kContained, kUpward, kBelowAll, kBelowCert };
  enum { kTopTypes };
  Runner run("prop3", o,
             {"top_cod", "top_part", "top_contained", "top_upward", "top_below_all", "top_below_certificate"},
             {"top_types"});
  const Universe& u = ctx.with_table(o.pairs, o.jobs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    if (!is_top(a)) return;
    c.count(kTopTypes);
    c.begin_case(i * (n + 1));
    if (auto cd = cod(a))
      c.check(kCod, is_top(*cd), [&] { return failure(print(a), "cod is not top"); });
    c.check(kPart, all_of_parts(a, is_top), [&] { return failure(print(a), "a part is not top"); });
    for (std::size_t j = 0; j < n; ++j) {
      const Ty& b = u.types[j];
      c.begin_case(i * (n + 1) + j + 1);
      if (contained_in(b, a))
        c.check(kContained, is_top(b), [&] { return failure(print(b) + " in " + print(a), "not top"); });
      if (u.sub(i, j))
        c.check(kUpward, is_top(b), [&] { return failure(judgement(a, b), "right side is not top"); });
      c.check(kBelowAll, u.sub(j, i), [&] { return failure(judgement(b, a), "not derivable"); });
      Derivation d = top_below(b, a);
      c.check(kBelowCert, validate(d).ok && d.lhs() == b && d.rhs() == a,
              [&] { return failure(judgement(b, a), "certificate invalid", cert_text(d)); });
    }
  });
  return run.finish();
}

SuiteReport suite_prop4(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kFactors, kInversionCert };
  Runner run("prop4", o, {"factors", "inversion_certificate"});
  const Universe& u = ctx.with_table(o.pairs, o.jobs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    for (std::uint32_t j : u.above[i]) {
      const Ty& b = u.types[j];
      c.begin_case(i * n + j);
      std::optional<Derivation> d;
      for (const Ty& part : parts(b)) {
        if (!part.is_arrow() || is_top(part.right())) continue;
        const Ty& cty = part.left();
        const Ty& dty = part.right();
        auto f = find_factor_exhaustive(a, cty, dty);
        c.check(kFactors, f && validate_factoring(*f).ok,
                [&] { return failure(judgement(a, b) + " , part " + print(part), "no factoring"); });
        if (!d) d = check_sub(a, b);
        std::string why;
        bool ok = false;
        try {
          Factoring g = invert_arrow(*d, part);
          auto r = validate_factoring(g);
          ok = r.ok && g.against == a && g.lhs == cty && g.rhs == dty;
          if (!ok) why = r.ok ? "wrong endpoints" : r.reason;
        } catch (const std::exception& e) {
          why = e.what();
        }
        c.check(kInversionCert, ok,
                [&] { return failure(judgement(a, b) + " , part " + print(part), why, cert_text(*d)); });
      }
    }
  });
  return run.finish();
}

SuiteReport suite_lemma1(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kMerge, kOracle };
  enum { kApplicable, kHypothesisUnmet };
  Runner run("lemma1", o, {"merge_valid", "factors_oracle"}, {"applicable", "hypothesis_unmet"});
  const Universe& u = ctx.get(o.pairs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    auto da = dom(a);
    auto ca = cod(a);
    if (!da || !ca || top_in_cod(a)) return;
    for (std::size_t j = 0; j < n; ++j) {
      const Ty& b = u.types[j];
      c.begin_case(i * n + j);
      FactoringMap per_part;
      bool hypothesis = true;
      for (const Ty& part : parts(a)) {
        if (per_part.count(part)) continue;
        auto f = find_factor(b, part.left(), part.right());
        if (!f) {
          hypothesis = false;
          break;
        }
        per_part.emplace(part, std::move(*f));
      }
      if (!hypothesis) {
        c.count(kHypothesisUnmet);
        continue;
      }
      c.count(kApplicable);
      std::string why;
      bool ok = false;
      try {
        Factoring m = lemma_factor_all(a, b, per_part);
        auto r = validate_factoring(m);
        ok = r.ok && m.against == b && m.lhs == *da && m.rhs == *ca;
        if (!ok) why = r.ok ? "wrong endpoints" : r.reason;
      } catch (const std::exception& e) {
        why = e.what();
      }
      c.check(kMerge, ok, [&] { return failure(print(a) + " against " + print(b), why); });
      c.check(kOracle, find_factor_exhaustive(b, *da, *ca).has_value(),
              [&] { return failure(print(a) + " against " + print(b), "dom -> cod does not factor"); });
    }
  });
  return run.finish();
}

SuiteReport suite_transitivity(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kCompose, kMeasure, kValidate, kEndpoints, kSubformula };
  enum { kTriples, kCalls, kMeasureChecks };
  Runner run("transitivity", o, {"compose", "measure", "validate", "endpoints", "subformula"},
             {"triples", "recursive_calls", "measure_checks"});
  const Universe& u = ctx.with_certificates(o.triples, o.jobs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    for (std::uint32_t j : u.above[i]) {
      const Derivation& d1 = *u.certificates[i * n + j];
      for (std::uint32_t k : u.above[j]) {
        const Derivation& d2 = *u.certificates[j * n + k];
        const Ty& cty = u.types[k];
        c.begin_case((i * n + j) * n + k);
        c.count(kTriples);
        auto inputs = [&] { return judgement(a, u.types[j]) + " ; " + judgement(u.types[j], cty); };
        ComposeStats stats;
        std::optional<Derivation> r;
        try {
          r = trans_compose(d1, d2, ComposeOptions{o.check_measure, &stats});
        } catch (const MeasureViolation& e) {
          c.check(kMeasure, false, [&] { return failure(inputs(), e.what()); });
          continue;
        } catch (const std::exception& e) {
          c.check(kCompose, false, [&] { return failure(inputs(), e.what()); });
          continue;
        }
        c.count(kCalls, stats.calls);
        c.count(kMeasureChecks, stats.measure_checks);
        c.check(kCompose, true, [] { return SuiteFailure{}; });
        if (o.check_measure) c.check(kMeasure, true, [] { return SuiteFailure{}; });
        auto v = validate(*r);
        c.check(kValidate, v.ok, [&] { return failure(inputs(), v.path + ": " + v.reason, derivation_to_tree(*r)); });
        c.check(kEndpoints, r->lhs() == a && r->rhs() == cty,
                [&] { return failure(inputs(), "composed certificate has wrong endpoints"); });
        c.check(kSubformula, check_subformula_conjunction(*r),
                [&] { return failure(inputs(), "subformula conjunction fails", cert_text(*r)); });
      }
    }
  });
  return run.finish();
}

SuiteReport suite_equivalence(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kToBcd, kToBcdEndpoints, kFromBcd, kFromBcdEndpoints, kSearchImpliesCheck, kSubformula };
  enum { kDerivable, kSearchHits, kSearchMisses };
  Runner run("equivalence", o,
             {"to_bcd_valid", "to_bcd_endpoints", "from_bcd_valid", "from_bcd_endpoints",
              "search_implies_check", "subformula"},
             {"derivable", "search_hits", "search_inconclusive_on_derivable"});
  const Universe& u = ctx.get(o.pairs);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Ty& b = u.types[j];
      c.begin_case(i * n + j);
      auto d = check_sub(a, b);
      if (d) {
        c.count(kDerivable);
        std::string why;
        std::optional<BcdDerivation> bd;
        try {
          bd = to_bcd(*d);
          auto r = bcd_validate(*bd);
          if (!r) why = r.path + ": " + r.reason;
        } catch (const std::exception& e) {
          why = e.what();
        }
        c.check(kToBcd, why.empty(), [&] { return failure(judgement(a, b), why, cert_text(*d)); });
        if (bd)
          c.check(kToBcdEndpoints, bd->lhs() == a && bd->rhs() == b,
                  [&] { return failure(judgement(a, b), "translation changed the judgement"); });
      }
      auto s = bcd_search(a, b, o.bcd_depth);
      if (!s) {
        if (d) c.count(kSearchMisses);
        continue;
      }
      c.count(kSearchHits);
      c.check(kSearchImpliesCheck, d.has_value(),
              [&] { return failure(judgement(a, b), "classic proof found but check_sub says no", cert_text(*s)); });
      std::string why;
      std::optional<Derivation> f;
      try {
        f = from_bcd(*s);
        auto r = validate(*f);
        if (!r) why = r.path + ": " + r.reason;
      } catch (const std::exception& e) {
        why = e.what();
      }
      c.check(kFromBcd, why.empty(), [&] { return failure(judgement(a, b), why, cert_text(*s)); });
      if (f) {
        c.check(kFromBcdEndpoints, f->lhs() == a && f->rhs() == b,
                [&] { return failure(judgement(a, b), "translation changed the judgement"); });
        c.check(kSubformula, check_subformula_conjunction(*f),
                [&] { return failure(judgement(a, b), "subformula conjunction fails", cert_text(*f)); });
      }
    }
  });
  return run.finish();
}

SuiteReport suite_witness(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kAgree, kStrategyValid, kExhaustiveValid };
  enum { kPresent };
  Runner run("witness-completeness", o, {"agree", "strategy_valid", "exhaustive_valid"}, {"present"});
  const Universe& u = ctx.get(o.triples);
  const std::size_t n = u.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = u.types[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Ty& b = u.types[j];
      if (!b.is_arrow() || is_top(b.right())) continue;
      c.begin_case(i * n + j);
      auto f = find_factor(a, b.left(), b.right());
      auto g = find_factor_exhaustive(a, b.left(), b.right());
      const std::string inputs = print(a) + " , " + print(b.left()) + " , " + print(b.right());
      c.check(kAgree, f.has_value() == g.has_value(), [&] {
        return failure(inputs, f ? "strategy found a witness, exhaustive did not"
                                 : "exhaustive found a witness, strategy did not",
                       g ? cert_text(to_arrow_prime(*g)) : std::string{});
      });
      if (f) {
        c.count(kPresent);
        Derivation d = to_arrow_prime(*f);
        c.check(kStrategyValid, validate_factoring(*f).ok && validate(d).ok,
                [&] { return failure(inputs, "strategy factoring invalid", cert_text(d)); });
      }
      if (g)
        c.check(kExhaustiveValid, validate_factoring(*g).ok,
                [&] { return failure(inputs, "exhaustive factoring invalid"); });
    }
  });
  return run.finish();
}

SuiteReport suite_subformula(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kCheckSub, kFromBcd, kFabricated };
  Runner run("subformula", o, {"check_sub", "from_bcd", "rejects_foreign"});
  const Universe& p = ctx.get(o.pairs);
  const std::size_t n = p.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    for (std::size_t j = 0; j < n; ++j) {
      c.begin_case(i * n + j);
      auto d = check_sub(p.types[i], p.types[j]);
      if (d)
        c.check(kCheckSub, check_subformula_conjunction(*d),
                [&] { return failure(judgement(p.types[i], p.types[j]), "fails", cert_text(*d)); });
    }
  });
  const Universe& t = ctx.get(o.triples);
  const std::size_t m = t.size();
  // A constant outside the universe never occurs in an honest certificate.
  const Ty foreign = Ty::constant(o.triples.atom_count + 7);
  run.phase(m, [&](std::size_t i, Collector& c) {
    for (std::size_t j = 0; j < m; ++j) {
      const Ty& a = t.types[i];
      const Ty& b = t.types[j];
      c.begin_case(i * m + j);
      auto s = bcd_search(a, b, o.bcd_depth);
      if (!s) continue;
      Derivation f = from_bcd(*s);
      c.check(kFromBcd, check_subformula_conjunction(f),
              [&] { return failure(judgement(a, b), "fails", cert_text(f)); });
    }
  });
  run.phase(1, [&](std::size_t, Collector& c) {
    c.begin_case(0);
    // A hand-built node whose witness mentions the foreign constant.
    Derivation stray = Derivation::make(Rule::ArrowPrime, Ty::arrow(Ty::constant(0), Ty::constant(1)),
                                        Ty::arrow(Ty::constant(0), Ty::constant(1)),
                                        Ty::arrow(foreign, Ty::constant(1)), {});
    c.check(kFabricated, !check_subformula_conjunction(stray),
            [&] { return failure("fabricated certificate", "foreign witness accepted"); });
  });
  return run.finish();
}

struct ConsistencyTables {
  BitRows cons;
  std::vector<char> self;
};

ConsistencyTables consistency_tables(const Universe& u) {
  const std::size_t n = u.size();
  ConsistencyTables t{BitRows(n, n), std::vector<char>(n, 0)};
  for (std::size_t a = 0; a < n; ++a) {
    t.self[a] = self_consistent(u.types[a]);
    for (std::size_t b = 0; b < n; ++b)
      if (consistent(u.types[a], u.types[b])) t.cons.set(a, b);
  }
  return t;
}

SuiteReport suite_consistency(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kSymmetry, kUpward };
  enum { kSelfConsistent, kQuadruples };
  Runner run("consistency-upward", o, {"symmetry", "upward_closure"}, {"self_consistent_types", "quadruples"});
  const Universe& u = ctx.with_certificates(o.triples, o.jobs);
  const std::size_t n = u.size();
  const auto [cons, self] = consistency_tables(u);
  run.set_counter(kSelfConsistent, static_cast<std::uint64_t>(std::count(self.begin(), self.end(), 1)));
  run.phase(n, [&](std::size_t a, Collector& c) {
    c.begin_case(a);
    for (std::size_t b = 0; b < n; ++b)
      c.check(kSymmetry, cons.test(a, b) == cons.test(b, a),
              [&] { return failure(print(u.types[a]) + " ~ " + print(u.types[b]), "asymmetric"); });
  });
  run.phase(n, [&](std::size_t a, Collector& c) {
    if (!self[a]) return;
    for (std::size_t b = 0; b < n; ++b) {
      if (!self[b] || !cons.test(a, b)) continue;
      c.begin_case(a * n + b);
      for (std::uint32_t cc : u.above[a]) {
        if (!self[cc]) continue;
        for (std::uint32_t dd : u.above[b]) {
          if (!self[dd]) continue;
          c.count(kQuadruples);
          c.check(kUpward, cons.test(cc, dd), [&] {
            return failure(print(u.types[a]) + " ~ " + print(u.types[b]) + " ; " + judgement(u.types[a], u.types[cc]) +
                               " ; " + judgement(u.types[b], u.types[dd]),
                           print(u.types[cc]) + " and " + print(u.types[dd]) + " are not consistent",
                           "[" + derivation_to_json(*u.certificates[a * n + cc]) + "," +
                               derivation_to_json(*u.certificates[b * n + dd]) + "]");
          });
        }
      }
    }
  });
  return run.finish();
}

SuiteReport suite_consistency_corollary(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kOccurring, kHereditary };
  enum { kCertificates, kHereditaryCertificates };
  Runner run("consistency-corollary", o, {"occurring_self_consistent", "hereditary_occurring_self_consistent"},
             {"certificates", "hereditary_certificates"});
  const Universe& u = ctx.with_certificates(o.triples, o.jobs);
  const std::size_t n = u.size();
  const auto [cons, self] = consistency_tables(u);
  // Hereditary: every subterm is self consistent, not just the type itself.
  std::vector<char> hereditary(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto subs = subterms(u.types[a]);
    hereditary[a] = std::all_of(subs.begin(), subs.end(), [](const Ty& t) { return self_consistent(t); });
  }
  run.phase(n, [&](std::size_t a, Collector& c) {
    for (std::uint32_t b : u.above[a]) {
      if (!self[a] || !self[b] || !cons.test(a, b)) continue;
      c.begin_case(a * n + b);
      const Derivation& d = *u.certificates[a * n + b];
      const bool strong = hereditary[a] && hereditary[b];
      c.count(kCertificates);
      if (strong) c.count(kHereditaryCertificates);
      for (const Ty& t : occurring_types(d)) {
        const bool ok = self_consistent(t);
        auto describe = [&] {
          return failure(judgement(u.types[a], u.types[b]), print(t) + " is not self consistent", cert_text(d));
        };
        c.check(kOccurring, ok, describe);
        if (strong) c.check(kHereditary, ok, describe);
      }
    }
  });
  return run.finish();
}

SuiteReport suite_roundtrip(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kUniverse, kRandom, kRandomDepth, kJson, kBcdJson };
  Runner run("roundtrip", o, {"universe", "random", "random_depth", "certificate_json", "bcd_certificate_json"});
  const Universe& p = ctx.get(o.pairs);
  auto roundtrip = [](const Ty& a, std::string& why) {
    const std::string text = print(a);
    try {
      Ty back = parse(text);
      if (back == a && print(back) == text) return true;
      why = "reparsed to " + print(back);
    } catch (const ParseError& e) {
      why = e.what();
    }
    return false;
  };
  run.phase(p.size(), [&](std::size_t i, Collector& c) {
    c.begin_case(i);
    std::string why;
    c.check(kUniverse, roundtrip(p.types[i], why), [&] { return failure(print(p.types[i]), why); });
  });
  run.phase(o.random_samples, [&](std::size_t i, Collector& c) {
    c.begin_case(i);
    const Ty a = random_type(o.seed + i, o.random_atoms, o.random_max_depth);
    std::string why;
    c.check(kRandom, roundtrip(a, why), [&] { return failure(print(a), why); });
    c.check(kRandomDepth, depth(a) <= o.random_max_depth, [&] { return failure(print(a), "too deep"); });
  });
  const Universe& t = ctx.with_certificates(o.triples, o.jobs);
  const std::size_t n = t.size();
  run.phase(n, [&](std::size_t i, Collector& c) {
    for (std::size_t j = 0; j < n; ++j) {
      c.begin_case(i * n + j);
      if (const auto& d = t.certificates[i * n + j]) {
        const std::string text = derivation_to_json(*d);
        std::string again;
        try {
          again = derivation_to_json(derivation_from_json(text));
        } catch (const std::exception& e) {
          again = e.what();
        }
        c.check(kJson, again == text, [&] { return failure(judgement(d->lhs(), d->rhs()), again, text); });
      }
      if (auto s = bcd_search(t.types[i], t.types[j], o.bcd_depth)) {
        const std::string text = derivation_to_json(*s);
        std::string again;
        try {
          again = derivation_to_json(bcd_derivation_from_json(text));
        } catch (const std::exception& e) {
          again = e.what();
        }
        c.check(kBcdJson, again == text, [&] { return failure(judgement(s->lhs(), s->rhs()), again, text); });
      }
    }
  });
  return run.finish();
}

SuiteReport suite_lemmas(const SuiteOptions& o, SuiteContext::Impl& ctx) {
  enum { kPremises, kFun, kDist, kEta };
  enum { kFunTuples, kDistTuples, kEtaTypes };
  Runner run("lemmas", o, {"premises_valid", "lemma_fun", "lemma_dist", "lemma_eta"},
             {"lemma_fun_tuples", "lemma_dist_tuples", "lemma_eta_types"});
  const Universe& t = ctx.with_certificates(o.triples, o.jobs);
  const std::size_t n = t.size();
  std::vector<const Derivation*> proofs;
  for (const auto& d : t.certificates)
    if (d) proofs.push_back(&*d);

  // Every premise is validated once here; lemma_fun re-validates its inputs,
  // and each output is then checked at its root, which together with valid
  // premises is the full validation.
  run.phase(proofs.size(), [&](std::size_t i, Collector& c) {
    c.begin_case(i);
    c.check(kPremises, validate(*proofs[i]).ok,
            [&] { return failure(judgement(proofs[i]->lhs(), proofs[i]->rhs()), "premise invalid"); });
  });
  run.phase(proofs.size(), [&](std::size_t i, Collector& c) {
    const Derivation& d1 = *proofs[i];  // C <: A
    for (std::size_t k = 0; k < proofs.size(); ++k) {
      const Derivation& d2 = *proofs[k];  // B <: D
      c.begin_case(i * proofs.size() + k);
      c.count(kFunTuples);
      std::string why;
      try {
        Derivation r = lemma_fun(d1, d2);
        auto v = validate_root(r);
        if (!v) {
          why = v.reason;
        } else if (!(r.lhs().left() == d1.rhs() && r.lhs().right() == d2.lhs() && r.rhs().left() == d1.lhs() &&
                     r.rhs().right() == d2.rhs())) {
          why = "wrong endpoints";
        } else {
          for (std::size_t p = 0; p < r.premise_count(); ++p)
            if (!r.premise(p).same_node(p == 0 ? d1 : d2)) why = "premise rebuilt instead of reused";
        }
      } catch (const std::exception& e) {
        why = e.what();
      }
      c.check(kFun, why.empty(), [&] {
        return failure(judgement(d1.lhs(), d1.rhs()) + " ; " + judgement(d2.lhs(), d2.rhs()), why);
      });
    }
  });
  run.phase(n, [&](std::size_t i, Collector& c) {
    const Ty& a = t.types[i];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Ty& b = t.types[j];
        const Ty& cc = t.types[k];
        c.begin_case((i * n + j) * n + k);
        c.count(kDistTuples);
        std::string why;
        try {
          Derivation r = lemma_dist(a, b, cc);
          auto v = validate(r);
          if (!v)
            why = v.path + ": " + v.reason;
          else if (!(r.lhs() == Ty::inter(Ty::arrow(a, b), Ty::arrow(a, cc)) &&
                     r.rhs() == Ty::arrow(a, Ty::inter(b, cc))))
            why = "wrong endpoints";
        } catch (const std::exception& e) {
          why = e.what();
        }
        c.check(kDist, why.empty(),
                [&] { return failure(print(a) + " , " + print(b) + " , " + print(cc), why); });
      }
    }
  });
  const Universe& p = ctx.get(o.pairs);
  run.phase(p.size(), [&](std::size_t i, Collector& c) {
    const Ty& a = p.types[i];
    auto da = dom(a);
    auto ca = cod(a);
    if (!da || !ca) return;
    c.begin_case(i);
    c.count(kEtaTypes);
    std::string why;
    try {
      BcdDerivation r = lemma_eta(a);
      auto v = bcd_validate(r);
      if (!v)
        why = v.path + ": " + v.reason;
      else if (!(r.lhs() == a && r.rhs() == Ty::arrow(*da, *ca)))
        why = "wrong endpoints";
    } catch (const std::exception& e) {
      why = e.what();
    }
    c.check(kEta, why.empty(), [&] { return failure(print(a), why); });
  });
  return run.finish();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&, SuiteContext::Impl&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"core", suite_core},
      {"soundness", suite_soundness},
      {"prop1", suite_prop1},
      {"prop2", suite_prop2},
      {"prop3", suite_prop3},
      {"prop4", suite_prop4},
      {"lemma1", suite_lemma1},
      {"transitivity", suite_transitivity},
      {"equivalence", suite_equivalence},
      {"witness-completeness", suite_witness},
      {"subformula", suite_subformula},
      {"consistency-upward", suite_consistency},
      {"consistency-corollary", suite_consistency_corollary},
      {"roundtrip", suite_roundtrip},
      {"lemmas", suite_lemmas},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options, SuiteContext& context) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options, context.impl());
  throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  SuiteContext context;
  return run_suite(name, options, context);
}

std::string reports_to_json(const std::vector<SuiteReport>& reports, bool with_timing) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.name;
    j["ok"] = r.ok();
    j["cases"] = r.cases;
    j["failure_count"] = r.failure_count();
    nlohmann::ordered_json props = nlohmann::ordered_json::object();
    for (const auto& [name, t] : r.properties) props[name] = {{"checked", t.checked}, {"failed", t.failed}};
    j["properties"] = std::move(props);
    nlohmann::ordered_json counters = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.counters) counters[name] = v;
    j["counters"] = std::move(counters);
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      nlohmann::ordered_json fj;
      fj["property"] = f.property;
      fj["inputs"] = f.inputs;
      fj["detail"] = f.detail;
      if (!f.certificate.empty()) fj["certificate"] = f.certificate;
      failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    if (with_timing) j["seconds"] = r.seconds;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

std::string reports_to_text(const std::vector<SuiteReport>& reports, bool with_timing) {
  std::string out;
  char buf[64];
  for (const auto& r : reports) {
    out += (r.ok() ? "PASS " : "FAIL ") + r.name + "  cases=" + std::to_string(r.cases) +
           " failures=" + std::to_string(r.failure_count());
    if (with_timing) {
      std::snprintf(buf, sizeof buf, "  %.2fs", r.seconds);
      out += buf;
    }
    out += '\n';
    for (const auto& [name, t] : r.properties)
      out += "  " + name + ": " + std::to_string(t.checked) + " checked, " + std::to_string(t.failed) + " failed\n";
    for (const auto& [name, v] : r.counters) out += "  [" + name + "] " + std::to_string(v) + '\n';
    for (const auto& f : r.failures) {
      out += "  ! " + f.property + ": " + f.inputs + " -- " + f.detail + '\n';
      if (!f.certificate.empty()) out += "    " + f.certificate + '\n';
    }
  }
  return out;
}

}  // namespace itsub
