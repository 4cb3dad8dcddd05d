// Prints every family certificate shipped with the library: the stored
// bound, the bound recomputed from the certificate's decomposition, and the
// best bound exhaustive search finds on the same graph. The three columns
// agreeing (searched possibly smaller) is the regression suite's job; this
// demo shows the same numbers in one table.
#include <cstdio>
#include <vector>

#include "copbound/decomp.hpp"
#include "copbound/families.hpp"
#include "copbound/graph.hpp"

int main() {
  std::vector<copbound::BoundCertificate> certs;
  for (int t = 3; t <= 7; ++t) certs.push_back(copbound::wheel_certificate(t));
  for (int t = 3; t <= 6; ++t)
    certs.push_back(copbound::three_row_certificate(t));
  for (int t = 4; t <= 6; ++t)
    certs.push_back(copbound::complete_certificate(t));
  for (int t = 3; t <= 7; t += 2)
    certs.push_back(copbound::triangle_bundle_certificate(t));
  for (int i = 1; i <= 4; ++i)
    certs.push_back(copbound::petersen_certificate(i));
  for (int t = 2; t <= 4; ++t)
    certs.push_back(copbound::universal_theta_certificate(t));

  std::printf("%-18s %3s %6s %10s %11s %9s\n", "family", "n", "paths",
              "certified", "recomputed", "searched");
  for (const copbound::BoundCertificate& c : certs) {
    copbound::BoundReport recomputed =
        copbound::evaluate_bound(c.graph, c.decomposition);
    copbound::BoundReport searched = copbound::optimize(c.graph);
    std::printf("%-18s %3d %6zu %10d %11d %9d\n", c.name.c_str(),
                c.graph.vertex_count(), c.decomposition.paths.size(), c.bound,
                recomputed.bound, searched.bound);
  }
  return 0;
}
