// Acceptance run: one PASS/FAIL line per criterion. Criterion 9 is
// exploratory and never affects the exit status.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "venn/venn.hpp"

using namespace venn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

int gating_failures = 0;

void report(int id, Outcome& o, const std::string& summary, bool gating = true) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << summary;
  const std::string d = o.detail.str();
  if (!d.empty()) std::cout << " [" << d << "]";
  if (!gating) std::cout << " (non-gating)";
  std::cout << std::endl;
  if (gating && !o.pass) ++gating_failures;
}

std::size_t bound(int n) { return static_cast<std::size_t>(n) << (n - 1); }

struct Item {
  const CorpusEntry* entry;
  std::unique_ptr<Analyzer> analyzer;
  bool venn = false;
  bool simple = false;
  bool fully = false;
};

}  // namespace

int main() {
  std::cout << std::unitbuf;

  // 1. Edwards family at default resolution.
  {
    Outcome o;
    const auto t0 = Clock::now();
    std::ostringstream edges;
    for (int n = 2; n <= 6; ++n) {
      const GridDiagram g = edwards_grid(n);
      Analyzer a(g);
      const std::size_t expected = (std::size_t{1} << (n + 1)) - 4;
      o.require(a.is_venn(), "n=" + std::to_string(n) + " not Venn");
      o.require(a.is_simple(), "n=" + std::to_string(n) + " not simple");
      o.require(a.total_edges() == expected,
                "n=" + std::to_string(n) + " e=" + std::to_string(a.total_edges()) + " expected " + std::to_string(expected));
      edges << (n == 2 ? "" : ",") << a.total_edges();
    }
    const double secs = seconds_since(t0);
    o.require(secs < 120, "runtime " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << "Edwards n=2..6 Venn and simple, e=" << edges.str() << " in " << secs << " s";
    report(1, o, s.str());
  }

  // Shared corpus for 2-6 and 9.
  const auto t_corpus = Clock::now();
  const std::vector<CorpusEntry> corpus = build_corpus();
  std::vector<Item> items;
  for (const auto& e : corpus) {
    Item it;
    it.entry = &e;
    it.analyzer = std::visit([](const auto& d) { return std::make_unique<Analyzer>(d); }, e.diagram);
    it.venn = it.analyzer->is_venn();
    it.simple = it.analyzer->is_simple();
    it.fully = it.venn && it.analyzer->fully_reducible_bruteforce().holds;
    items.push_back(std::move(it));
  }
  std::cout << "corpus: " << corpus.size() << " diagrams built and classified in " << seconds_since(t_corpus) << " s" << std::endl;
  for (const auto& it : items) {
    const auto& e = *it.entry;
    std::cout << "  " << e.id << " m=" << e.m << " n=" << e.n << " regions=" << it.analyzer->region_count()
              << " e=" << it.analyzer->total_edges() << " venn=" << it.venn << " simple=" << it.simple << " fully=" << it.fully;
    for (const auto& ord : e.lift_orders) {
      std::cout << " stagger(start";
      for (int i : ord.start) std::cout << " " << i;
      std::cout << "; end";
      for (int i : ord.end) std::cout << " " << i;
      std::cout << ")";
    }
    std::cout << std::endl;
  }

  // 2. Edge bound and its equality case.
  {
    Outcome o;
    int checked = 0;
    for (auto& it : items) {
      const auto& e = *it.entry;
      o.require(it.venn, e.id + " not Venn");
      o.require(it.simple, e.id + " not simple");
      if (!it.venn || !it.simple || e.n < 2) continue;
      const Theorem3Record rec = it.analyzer->theorem3_check();
      ++checked;
      o.require(rec.edges <= rec.bound, e.id + " e=" + std::to_string(rec.edges) + " above bound " + std::to_string(rec.bound));
      o.require(rec.equality == rec.fully_reducible, e.id + " equality and full reducibility disagree");
      const bool want_equal_and_full = (e.m == 2 && e.n <= 3) || (e.m == 3 && e.n <= 4);
      const bool want_strict_and_not = e.m == 2 && e.n >= 4;
      if (want_equal_and_full) o.require(rec.equality && rec.fully_reducible, e.id + " expected equality and fully reducible");
      if (want_strict_and_not) o.require(!rec.equality && !rec.fully_reducible, e.id + " expected strict inequality and not fully reducible");
    }
    report(2, o, "e <= n 2^(n-1) with equality iff fully reducible on " + std::to_string(checked) + " corpus diagrams");
  }

  // 3. Subset-size criterion against brute force.
  {
    Outcome o;
    int comparisons = 0;
    for (auto& it : items) {
      const auto& e = *it.entry;
      if (!it.venn || !it.simple || e.n < 3) continue;
      for (int r = 2; r < e.n; ++r) {
        const bool via = it.analyzer->fully_reducible_via_r(r).holds;
        ++comparisons;
        o.require(via == it.fully, e.id + " r=" + std::to_string(r) + " disagrees");
      }
    }
    report(3, o, std::to_string(comparisons) + " (diagram, r) pairs agree with the brute-force oracle");
  }

  // 4. Dimension bound and evidence for lifted diagrams.
  {
    Outcome o;
    std::ostringstream table;
    for (auto& it : items) {
      const auto& e = *it.entry;
      if (it.fully) o.require(e.n <= e.m + 1, e.id + " fully reducible with n > m+1");
      if (it.venn && it.simple) o.require(it.analyzer->theorem4_check().implication_holds, e.id + " implication fails");
      if (e.origin == "lift" && e.n <= e.m + 1 && e.n >= 3) {
        o.require(it.fully, e.id + " (n <= m+1) not fully reducible");
        table << " V_{" << e.m << "," << e.n << "}=" << (it.fully ? "fully" : "NOT fully");
      }
    }
    report(4, o, "fully reducible implies n <= m+1; lifted evidence:" + table.str());
  }

  // 5. Labels present in every subset, distinct curves around faces, deletion identity.
  {
    Outcome o;
    std::size_t subsets = 0, surfaces = 0, maps = 0;
    for (auto& it : items) {
      const auto& e = *it.entry;
      Analyzer& a = *it.analyzer;
      if (it.venn) {
        for (int k = 0; k <= e.n; ++k) {
          a.for_each_subset(k, [&](SurfaceSet s) {
            ++subsets;
            o.require(a.check_lemma1(s), e.id + " subset " + a.to_surfaces(s).to_string() + " misses a label");
            return true;
          });
        }
      }
      if (const auto* map = std::get_if<CombinatorialMap>(&e.diagram); map && it.simple) {
        ++maps;
        o.require(!check_lemma3(*map).has_value(), e.id + " has a face meeting one curve twice");
      }
      if (it.simple) {
        for (const auto& c : a.deletion_identity()) {
          ++surfaces;
          o.require(c.holds, e.id + " deletion identity fails at surface " + std::to_string(c.surface));
        }
      }
    }
    report(5, o,
           std::to_string(subsets) + " subsets keep all labels, " + std::to_string(maps) + " maps have distinct face curves, " +
               std::to_string(surfaces) + " surfaces satisfy r(V) - r(V minus S) = e(S)");
  }

  // 6. Projection onto each surface of fully reducible diagrams.
  {
    Outcome o;
    int projections = 0;
    for (auto& it : items) {
      if (!it.fully) continue;
      const auto& e = *it.entry;
      for (int i : it.analyzer->surfaces().ids()) {
        const Census c = it.analyzer->projection_census(i);
        ++projections;
        const std::size_t want = std::size_t{1} << (e.n - 1);
        o.require(c.label_count() == want && c.region_count() == want,
                  e.id + " surface " + std::to_string(i) + ": " + std::to_string(c.label_count()) + " labels, " +
                      std::to_string(c.region_count()) + " regions");
      }
    }
    report(6, o, std::to_string(projections) + " surface projections are Venn with 2^(n-1) labels");
  }

  // 7. Exact numerics.
  {
    Outcome o;
    const auto t0 = Clock::now();
    const BoundTable t3 = conj3_coefficients(3);
    o.require(t3.coefficients.size() == 2 && t3.coefficients[0] == 0 && t3.coefficients[1] == -4, "coefficients for m=3");
    o.require(conj3_bound(3, 5) == 76, "B(3,5) = " + conj3_bound(3, 5).str());
    for (int m = 2; m <= 12; ++m) o.require(bound_consistency(m), "bound consistency m=" + std::to_string(m));
    for (int m = 3; m <= 12; ++m) o.require(det_identity_check(m).equal, "determinant identity m=" + std::to_string(m));
    for (int m = 2; m <= 12; ++m) {
      for (int n = 2; n <= m + 1; ++n) {
        o.require(recurrence_edges(m, n) == conj3_bound(m, n), "recurrence m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 5, "runtime " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << "coefficients(3)=(0,-4), B(3,5)=76, consistency m<=12, determinant identity m<=12, recurrence agrees; " << secs << " s";
    report(7, o, s.str());
  }

  // 8. Traced maps against grids; refinement invariance.
  {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      const GridDiagram g = edwards_grid(n);
      const CombinatorialMap m = trace_map(g);
      Analyzer ag(g), am(m);
      const std::string tag = "n=" + std::to_string(n);
      o.require(ag.region_count() == am.region_count(), tag + " region counts differ");
      o.require(ag.total_edges() == am.total_edges(), tag + " edge totals differ");
      o.require(ag.edges() == am.edges(), tag + " per-curve edges differ");
      const GridDiagram r = refine(g);
      Analyzer ar(r);
      o.require(ar.census().components == ag.census().components, tag + " refine changes the census");
      o.require(ar.edges() == ag.edges(), tag + " refine changes edge counts");
    }
    report(8, o, "traced map and grid agree on r, e and per-curve e for n=2..5; refine keeps the census");
  }

  // 9. Exploratory: edges of the 3D 5-Venn lift.
  {
    Outcome o;
    std::ostringstream s;
    bool found = false;
    for (auto& it : items) {
      const auto& e = *it.entry;
      if (e.origin != "lift" || e.m != 3 || e.n != 5) continue;
      found = true;
      const std::size_t edges = it.analyzer->total_edges();
      const BigInt predicted = recurrence_edges(3, 5);
      s << "3D 5-Venn lift: e=" << edges << ", recurrence prediction " << predicted.str()
        << ", smaller known construction 73, bound n 2^(n-1)=" << bound(5) << "; ";
      if (BigInt(edges) <= predicted) {
        s << "consistent with the conjectured bound";
      } else {
        s << "COUNTEREXAMPLE to the conjectured bound";
        o.require(false, "e exceeds 76");
      }
    }
    if (!found) o.require(false, "3D 5-Venn lift missing from corpus");
    report(9, o, s.str(), false);
  }

  std::cout << (gating_failures == 0 ? "ALL GATING CRITERIA PASS" : std::to_string(gating_failures) + " GATING CRITERIA FAIL") << std::endl;
  return gating_failures == 0 ? 0 : 1;
}
