// Regenerates the committed golden oracle values (data/golden_regular.txt).
// Usage: hytet_golden_gen <output-file>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "hytet/oracle.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: hytet_golden_gen <output-file>\n";
        return 2;
    }
    hytet::QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    std::vector<hytet::GoldenRecord> records;
    for (double rho : {0.25, 0.5, 1.0, 2.0}) {
        hytet::Lengths6 l;
        l.v.fill(rho);
        const auto stats =
            hytet::integrate_klein_stats(hytet::to_klein(hytet::embed_vertices(l)), spec);
        std::ostringstream key;
        key << "rho=" << rho;
        records.push_back({key.str(), stats.value, spec.rel_tol, stats.cells});
        std::cerr << key.str() << " -> " << stats.value << " (" << stats.cells << " cells)\n";
    }
    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    hytet::write_golden(out, records);
    return 0;
}
