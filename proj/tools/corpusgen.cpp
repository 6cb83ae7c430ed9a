// Writes a graph6 corpus of all connected graphs up to isomorphism on
// 1..N vertices, one per line, smallest n first.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "thetakit/graph.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate a connected-graph graph6 corpus"};
    int max_n = 7;
    std::string out_path;
    app.add_option("-n,--max-n", max_n, "largest vertex count (<= 8)");
    app.add_option("-o,--output", out_path, "output file (default stdout)");
    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open '" << out_path << "'\n";
            return 1;
        }
        out = &file;
    }

    *out << "# connected graphs up to isomorphism, n = 1.." << max_n << "\n";
    for (int n = 1; n <= max_n; ++n)
        for (const thetakit::Graph& g : thetakit::enumerate_connected_graphs(n))
            *out << thetakit::write_graph6(g) << "\n";
    return 0;
}
