// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <path to wm> [--slow]
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "wm/verify.hpp"
#include "wm/vertexops.hpp"
#include "wm/wreath.hpp"

using namespace wm;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.ok) o.detail = why;
    o.ok = false;
}

// identity ids at r = 3 with the given size bound; -1 uses each identity's default
Outcome identities(const std::vector<std::string>& ids, int max_quot, int r = 3) {
    Outcome o;
    int n = 0;
    for (auto& id : ids) {
        VerifyConfig cfg;
        cfg.r = r;
        cfg.max_quot = max_quot;
        const Identity* ident = find_identity(id);
        if (!ident) {
            fail(o, "unknown identity " + id);
            continue;
        }
        for (auto& c : run_identity(*ident, cfg)) {
            ++n;
            if (c.status != Status::pass) {
                std::string p;
                for (auto& [k, v] : c.params) p += " " + k + "=" + v;
                fail(o, id + p + ": " + c.note);
            }
        }
    }
    if (o.ok) o.detail = std::to_string(n) + " checks";
    return o;
}

Outcome combinatorics() {
    Outcome o;
    int n = 0;
    for (int r : {2, 3, 4})
        for (int size = 0; size <= 8; ++size)
            for (auto& l : partitions_of(size)) {
                ++n;
                if (partition_of(maya_of(l)) != l) fail(o, "maya round trip " + l.str());
                CoreQuotient cq = core_quot(l, r);
                if (from_core_quot(cq.charges, cq.quot) != l) fail(o, "core-quotient round trip " + l.str());
                if (core_partition(cq.charges) != cq.core) fail(o, "core from charges " + l.str());
                auto& c = cq.charges.charges;
                for (int i = 0; i < r; ++i) {
                    int d = 0;
                    for (auto& x : l.addable()) d += color(x, r) == i;
                    for (auto& x : l.removable()) d -= color(x, r) == i;
                    if (d != (i == 0) + c[mod(i - 1, r)] - c[i]) fail(o, "charge identity " + l.str());
                }
            }
    if (o.ok) o.detail = std::to_string(n) + " partitions";
    return o;
}

MultiSymFunc from_p(const std::map<Partition, RatFunc>& c) {
    MultiSymFunc f(1);
    for (auto& [rho, x] : c) {
        PIndex k;
        for (int part : rho.parts()) k.push_back(pcode(part, 0));
        f.add_term(k, x);
    }
    return f;
}

Outcome h_construction() {
    Outcome o;
    int count = 0;
    for (int n = 0; n <= 3; ++n)
        for (auto& l : partitions_of(n))
            if (n > 0 && wreath_H(l, 1) != from_p(oracle::modified_macdonald(l))) fail(o, "r=1 oracle " + l.str());
    {
        auto s = h_table(CoreLabel::zero(1), 2).schur;
        Multipartition two{Partition({2})}, ones{Partition({1, 1})};
        RatFunc q = RatFunc::var(kQ);
        int i = h_table(CoreLabel::zero(1), 2).index(Partition({2}));
        if (s[i].at(two) != RatFunc(1) || s[i].at(ones) != q) fail(o, "H_(2) != s2 + q s11");
    }
    for (auto& core : default_cores(3))
        for (int n = 0; n <= 2; ++n) {
            HTable exact = compute_H(core, n, HMethod::exact);
            const HTable& shared = h_table(core, n);
            for (size_t i = 0; i < exact.lambdas.size(); ++i) {
                ++count;
                std::string why;
                if (exact.intersection_dim[i] != 1) fail(o, "intersection dimension for " + exact.lambdas[i].str());
                if (!satisfies_definition(exact.H[i], exact.lambdas[i], 3, &why)) fail(o, why);
                if (exact.H[i] != shared.H[i]) fail(o, "sampled and exact H differ for " + exact.lambdas[i].str());
            }
        }
    if (o.ok) o.detail = std::to_string(count) + " H at r = 3 by exact elimination";
    return o;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::stringstream s;
    s << f.rdbuf();
    out = s.str();
    return true;
}

Outcome determinism(const std::string& wm) {
    Outcome o;
    std::string a = "acceptance_desk_jobs1.json", b = "acceptance_desk_jobs2.json";
    for (auto& [path, jobs] : std::vector<std::pair<std::string, int>>{{a, 1}, {b, 2}}) {
        std::string cmd = wm + " verify all --suite desk --jobs " + std::to_string(jobs) + " --out " + path + " 2>/dev/null";
        if (std::system(cmd.c_str()) != 0) fail(o, "desk run with --jobs " + std::to_string(jobs) + " did not pass");
    }
    std::string x, y;
    if (!read_file(a, x) || !read_file(b, y)) fail(o, "missing report");
    else if (x != y) fail(o, "reports differ");
    else if (o.ok) o.detail = std::to_string(x.size()) + " bytes, identical";
    std::remove(a.c_str());
    std::remove(b.c_str());
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::string wm = argc > 1 ? argv[1] : "./wm";
    bool slow = argc > 2 && std::string(argv[2]) == "--slow";

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
    if (slow) {
        criteria.push_back({"5 (slow gate) tesler and shifted tesler, |quot| <= 2",
                            [] { return identities({"tesler", "tesler-shifted"}, 2); }});
    } else {
        criteria = {
            {"1 combinatorics, r in {2,3,4}, |lambda| <= 8", combinatorics},
            {"2 H construction", h_construction},
            {"3 biorthogonality and Cauchy kernel", [] { return identities({"biorthogonality", "cauchy"}, 2); }},
            {"4 nabla eigenvalues", [] { return identities({"nabla-ev", "nabla-ev-shifted"}, 2); }},
            {"5 tesler and shifted tesler, |quot| <= 1", [] { return identities({"tesler", "tesler-shifted"}, 1); }},
            {"6 star tesler", [] { return identities({"tesler-star"}, 1); }},
            {"7 evaluation duality and evaluation",
             [] {
                 Outcome a = identities({"mk"}, 1), b = identities({"eval-one"}, 2);
                 return a.ok ? b : a;
             }},
            {"8 consequences",
             [] {
                 Outcome a = identities({"reciprocity", "fourier-pairing", "kostka", "e-expansion", "skew"}, 2);
                 Outcome b = identities({"interpolation"}, 1);
                 return a.ok ? b : a;
             }},
            {"9 vertex operators", [] { return identities({"boson", "dual-boson", "dd-eigen", "delta-p1", "column"}, -1); }},
            {"10 determinism", [&] { return determinism(wm); }},
        };
    }
    bool all = true;
    for (auto& [name, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1fs", s);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << o.detail << ", " << buf << ")"
                  << std::endl;
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
