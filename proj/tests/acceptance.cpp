// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Every expected value is pinned exactly (rational arithmetic throughout).
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "genkummer/intlat.hpp"
#include "genkummer/report.hpp"
#include "genkummer/sympfin.hpp"

using genkummer::report::Options;
using genkummer::report::Report;

namespace {

std::map<std::string, Report> reports;

const Report& get(const std::string& name) {
  auto it = reports.find(name);
  if (it == reports.end()) {
    Options opt;
    it = reports.emplace(name, genkummer::report::run_report(name, opt)).first;
  }
  return it->second;
}

bool check_of(const std::string& report, const std::string& check) {
  for (const auto& c : get(report).checks)
    if (c.name == check) return c.pass;
  std::fprintf(stderr, "missing check %s/%s\n", report.c_str(), check.c_str());
  return false;
}

bool all_of(const std::string& report) { return get(report).passed(); }

int failures = 0;

void criterion(int n, const char* what, bool ok) {
  std::printf("criterion %2d [%s]: %s\n", n, ok ? "PASS" : "FAIL", what);
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "Hilbert-square basis unimodular; odd dual pairings 2, 1, -1",
            check_of("hilb2-basis", "gram-blocks-unimodular") &&
                check_of("hilb2-basis", "q2-dual-pairing") &&
                check_of("hilb3-theta", "odd-pairing-h3h5") &&
                check_of("hilb3-theta", "odd-pairing-q2"));

  criterion(2, "Betti numbers of the Hilbert square and the Kummer fourfold",
            check_of("hilb2-basis", "betti-by-degree") &&
                check_of("hilb2-basis", "betti-goettsche") &&
                check_of("hilb3-theta", "theta-counts") &&
                check_of("h4-lattice", "ranks"));

  criterion(3, "symplectic tables over F_2, F_3, F_5 with plane counts",
            all_of("symplectic-tables"));

  criterion(4, "orbit sizes {5,30} with the explicit five-element orbit",
            all_of("gxi-orbits"));

  criterion(5, "lattice discriminants 3^84, 2^14 3^38, 3^22, 1 and quotients",
            check_of("h4-lattice", "discr-piprime") &&
                check_of("h4-lattice", "discr-sym") &&
                check_of("h4-lattice", "discr-sym-sat") &&
                check_of("h4-lattice", "discr-pi-sat") &&
                check_of("h4-lattice", "discr-full") &&
                check_of("h4-lattice", "quot-sym") &&
                check_of("h4-lattice", "quot-piprime") &&
                check_of("h4-lattice", "quot-full") &&
                check_of("h4-lattice", "index-sym+pi"));

  criterion(6, "appendix divisibility, independence, non-isotropy",
            all_of("appendix"));

  criterion(7, "class identities and Fujiki/Fock cross-pipeline agreement",
            check_of("h4-lattice", "identity-w") &&
                check_of("h4-lattice", "identity-c2-sym") &&
                check_of("h4-lattice", "identity-yp") &&
                check_of("h4-lattice", "sym-cap-pi") &&
                check_of("h4-lattice", "c2-primitive") &&
                check_of("h4-lattice", "crosscheck-quadruples") &&
                check_of("h4-lattice", "crosscheck-e4") &&
                check_of("h4-lattice", "crosscheck-z0e2") &&
                check_of("h4-lattice", "crosscheck-c2"));

  criterion(8, "involution invariants (0,0,7), (0,8,0), (40,0,28); 60 = 60",
            all_of("invariants"));

  criterion(9, "Fujiki constant 8, odd Gram U(3)^3 + [[-5,-4],[-4,-5]]",
            all_of("bb-kprime"));

  // Property suites independent of golden values.
  bool props = check_of("torus-ring", "supercommutativity") &&
               check_of("torus-ring", "associativity") &&
               check_of("hilb2-basis", "adjointness-samples") &&
               check_of("hilb2-basis", "cup-supercommutativity-samples") &&
               check_of("hilb2-basis", "creation-from-dq1") &&
               check_of("h4-lattice", "saturate-idempotent");
  {
    // Smith form postconditions and the discriminant/index identity.
    using namespace genkummer::intlat;
    try {
      snf({{4, 6, 2}, {6, 0, 3}, {2, 3, 9}});
      RatMat gram = {{2, 1}, {1, 4}};
      Sublattice sup{rat_identity(2), &gram};
      Sublattice sub{{{3, 0}, {1, 2}}, &gram};
      genkummer::Int idx = index_of(sub, sup);
      props = props && (sub.discr() == idx * idx * sup.discr());
    } catch (...) {
      props = false;
    }
    // Transvections preserve the form (throws otherwise).
    try {
      genkummer::sympfin::SympSpace s{3, genkummer::sympfin::standard_form(3)};
      genkummer::sympfin::line_representatives(s);
    } catch (...) {
      props = false;
    }
  }
  criterion(10, "property suites (Koszul, adjoint, SNF, saturation, forms)",
            props);

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures ? 1 : 0;
}
