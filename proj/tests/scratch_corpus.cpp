#include <chrono>
#include <iostream>
#include <map>
#include "bochvar/corpus.hpp"
#include "bochvar/axioms.hpp"
#include "bochvar/plonka.hpp"
using namespace bochvar;
using clk = std::chrono::steady_clock;
int main() {
    auto t0 = clk::now();
    CorpusOptions opts;
    opts.derived = false;
    auto nod = build_corpus(opts);
    auto t1 = clk::now();
    std::cout << "no-derived corpus: " << nod.size() << " in "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1-t0).count() << " ms\n";
    auto corpus = build_corpus();
    auto t2 = clk::now();
    std::cout << "full corpus: " << corpus.size() << " in "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t2-t1).count() << " ms\n";
    std::map<int,int> by_size;
    int derived_count = 0;
    for (auto& e : corpus) {
        by_size[e.algebra.size()]++;
        if (e.label.find("|sub") != std::string::npos || e.label.find("/q") != std::string::npos) derived_count++;
    }
    std::cout << "derived entries: " << derived_count << "\nsizes:";
    for (auto& [s,c] : by_size) std::cout << " " << s << ":" << c;
    std::cout << "\n";
    // how many bottom-fibre elements total (theta audit cost proxy)
    long long theta_calls = 0;
    for (auto& e : corpus) {
        Decomposition d = decompose(e.algebra.reduct());
        for (int g = 0; g < e.algebra.size(); ++g)
            if (d.fibre_of[g] == d.system.bottom()) ++theta_calls;
    }
    auto t3 = clk::now();
    std::cout << "theta calls needed: " << theta_calls << " (decompose sweep took "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t3-t2).count() << " ms)\n";
}
