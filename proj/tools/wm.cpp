// wm: tables of wreath Macdonald polynomials and identity verification.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wm/verify.hpp"
#include "wm/vertexops.hpp"
#include "wm/wreath.hpp"

using json = nlohmann::ordered_json;
using namespace wm;

namespace {

constexpr const char* kSchema = "wm-report/1";

enum Exit { ok = 0, failure = 1, config_error = 2, internal_error = 3 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int r = 3;
    std::vector<std::string> cores;
    int max_quot = -1;
    int trunc = -1;
    int order = 4;
    int window = -1;
    int k = -1;
    int jobs = 1;
    std::string out;
    std::string format = "json";
    std::string suite;
    std::string identity;
    std::string lambda;
};

// "a,b,...": charges, r - 1 of them get the negated sum appended; "(p1,p2,...)": the core of a partition
CoreLabel parse_core(const std::string& s, int r) {
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw ConfigError("bad core partition " + s);
        return core_label(Partition::parse(s.substr(1, s.size() - 2)), r);
    }
    std::vector<int> c;
    std::stringstream ss(s);
    std::string tok;
    try {
        while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
    } catch (const std::exception&) {
        throw ConfigError("bad core " + s);
    }
    int sum = 0;
    for (int x : c) sum += x;
    if (int(c.size()) == r - 1) c.push_back(-sum), sum = 0;
    if (int(c.size()) != r) throw ConfigError("core " + s + " needs " + std::to_string(r) + " charges");
    if (sum != 0) throw ConfigError("core charges must sum to zero: " + s);
    return CoreLabel{c};
}

std::vector<CoreLabel> cores_of(const Options& o) {
    if (o.cores.empty()) return default_cores(o.r);
    std::vector<CoreLabel> out;
    for (auto& s : o.cores) out.push_back(parse_core(s, o.r));
    return out;
}

json params_json(const std::vector<std::pair<std::string, std::string>>& p) {
    json j = json::object();
    for (auto& [k, v] : p) j[k] = v;
    return j;
}

json config_json(const Options& o) {
    json j;
    j["r"] = o.r;
    j["cores"] = o.cores;
    j["max_quot"] = o.max_quot;
    j["trunc"] = o.trunc;
    j["order"] = o.order;
    j["window"] = o.window;
    if (o.k >= 0) j["k"] = o.k;
    if (!o.suite.empty()) j["suite"] = o.suite;
    return j;
}

json header(const std::string& command, const Options& o) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["config"] = config_json(o);
    j["experimental"] = o.r == 2;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string flat(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Tables are objects with a "rows" array of flat objects; CSV emits the rows.
void emit(const json& doc, const Options& o) {
    std::ostringstream s;
    if (o.format == "json") {
        s << doc.dump(2) << "\n";
    } else {
        const json& rows = doc.at("rows");
        std::vector<std::string> cols;
        for (auto& row : rows)
            for (auto& [k, _] : row.items())
                if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
        for (size_t i = 0; i < cols.size(); ++i) s << (i ? "," : "") << cols[i];
        s << "\n";
        for (auto& row : rows) {
            for (size_t i = 0; i < cols.size(); ++i)
                s << (i ? "," : "") << (row.contains(cols[i]) ? csv_field(flat(row[cols[i]])) : "");
            s << "\n";
        }
    }
    if (o.out.empty()) {
        std::cout << s.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw ConfigError("cannot write " + o.out);
        f << s.str();
    }
}

json schur_json(const std::map<Multipartition, RatFunc>& m) {
    json j = json::object();
    for (auto& [g, c] : m) j[multipartition_str(g)] = c.str();
    return j;
}

// ---- verbs ----

int cmd_compute(const Options& o) {
    json doc = header("compute", o);
    json rows = json::array();
    int n_max = o.max_quot < 0 ? 1 : o.max_quot;
    for (auto& core : cores_of(o))
        for (int n = 0; n <= n_max; ++n) {
            const HTable& t = h_table(core, n);
            for (size_t i = 0; i < t.lambdas.size(); ++i) {
                json row;
                row["core"] = core.str();
                row["n"] = n;
                row["lambda"] = t.lambdas[i].str();
                row["quot"] = multipartition_str(quotient(t.lambdas[i], o.r));
                row["H"] = schur_json(t.schur[i]);
                row["Hdag"] = schur_json(to_schur(t.Hdag[i]));
                row["N"] = t.norm[i].str();
                row["nabla"] = nabla_eigen(t.lambdas[i], o.r).str();
                rows.push_back(row);
            }
        }
    doc["rows"] = rows;
    emit(doc, o);
    return ok;
}

int cmd_kostka(const Options& o) {
    json doc = header("kostka", o);
    json rows = json::array();
    int n_max = o.max_quot < 0 ? 1 : o.max_quot;
    for (auto& core : cores_of(o))
        for (int n = 0; n <= n_max; ++n)
            for (auto& mu : enumerate(core, n))
                for (auto& g : multipartitions(n, o.r)) {
                    json row;
                    row["core"] = core.str();
                    row["mu"] = mu.str();
                    row["gamma"] = multipartition_str(g);
                    row["K"] = kostka(g, mu, o.r).str();
                    rows.push_back(row);
                }
    doc["rows"] = rows;
    emit(doc, o);
    return ok;
}

std::string box_str(const Box& x) { return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")"; }

int cmd_fock(const Options& o) {
    if (o.lambda.empty()) throw ConfigError("fock needs --lambda");
    Partition l = Partition::parse(o.lambda);
    json doc = header("fock", o);
    doc["lambda"] = l.str();
    json rows = json::array();
    for (int i = 0; i < o.r; ++i) {
        json row;
        row["color"] = i;
        json add = json::array(), rem = json::array();
        for (auto& x : l.addable())
            if (color(x, o.r) == i) {
                Partition m = l.add_box(x);
                add.push_back({{"box", box_str(x)},
                               {"e", fock_current(Current::e, i, l, m, o.r).coeff.str()},
                               {"f", fock_current(Current::f, i, l, m, o.r).coeff.str()},
                               {"point", fock_current(Current::e, i, l, m, o.r).point.str()}});
            }
        for (auto& x : l.removable())
            if (color(x, o.r) == i) rem.push_back(box_str(x));
        row["addable"] = add;
        row["removable"] = rem;
        row["psi"] = fock_current(Current::psi, i, l, l, o.r).coeff.str();
        json b = json::object();
        for (int k : {1, 2, 3, -1, -2, -3}) b[std::to_string(k)] = boson_eigen(l, i, k, o.r).str();
        row["boson"] = b;
        row["dual_boson"] = {{"+1", dual_boson_eigen(l, i, 1, o.r).str()}, {"-1", dual_boson_eigen(l, i, -1, o.r).str()}};
        rows.push_back(row);
    }
    doc["rows"] = rows;
    emit(doc, o);
    return ok;
}

int cmd_ddiag(const Options& o) {
    if (o.r < 3) throw ConfigError("ddiag needs r >= 3");
    json doc = header("ddiag", o);
    json rows = json::array();
    bool all_ok = true;
    int n_max = o.max_quot < 0 ? 1 : o.max_quot;
    for (auto& core : cores_of(o))
        for (int n = 0; n <= n_max; ++n)
            for (auto& l : enumerate(core, n))
                for (int p = 0; p < o.r; ++p)
                    for (bool star : {false, true}) {
                        std::vector<int> k(o.r, 0);
                        k[p] += star ? -1 : 1;
                        k[0] += star ? 1 : -1;
                        WreathPoly h{wreath_H(l, o.r), core};
                        RatFunc ev = dd_eigenvalue(l, p, star, o.r);
                        json row;
                        row["core"] = core.str();
                        row["lambda"] = l.str();
                        row["p"] = p;
                        row["star"] = star;
                        row["eigenvalue"] = ev.str();
                        std::string why;
                        bool good = false;
                        try {
                            good = series_equal(dd_apply(h, k, star, o.order, o.window),
                                                series_scale(to_series(h, o.order, star), ev), &why);
                        } catch (const window_error& e) {
                            why = e.what();
                        }
                        row["status"] = good ? "pass" : "fail";
                        if (!good) row["mismatch"] = why;
                        all_ok = all_ok && good;
                        rows.push_back(row);
                    }
    doc["rows"] = rows;
    emit(doc, o);
    return all_ok ? ok : failure;
}

struct Run {
    int r;
    const Identity* id;
    int max_quot;
};

std::vector<Run> plan(const Options& o) {
    std::vector<Run> runs;
    auto add_all = [&](int r, int mq) {
        for (auto& id : all_identities()) runs.push_back({r, &id, mq});
    };
    if (o.suite == "desk") {
        // r = 3 with each identity's default size, then r = 1
        add_all(3, o.max_quot);
        add_all(1, o.max_quot);
    } else if (o.suite == "slow") {
        for (const char* id : {"tesler", "tesler-shifted"}) runs.push_back({o.r, find_identity(id), 2});
    } else if (!o.suite.empty()) {
        throw ConfigError("unknown suite " + o.suite);
    } else if (o.identity == "all") {
        add_all(o.r, o.max_quot);
    } else {
        const Identity* id = find_identity(o.identity);
        if (!id) throw ConfigError("unknown identity " + o.identity);
        runs.push_back({o.r, id, o.max_quot});
    }
    return runs;
}

int cmd_verify(const Options& o) {
    if (o.identity.empty() && o.suite.empty()) throw ConfigError("verify needs an identity, 'all', or --suite");
    json doc = header("verify", o);
    json rows = json::array();
    int pass = 0, fail = 0, skipped = 0, ungated = 0;
    for (auto& run : plan(o)) {
        VerifyConfig cfg;
        cfg.r = run.r;
        if (run.r == o.r)
            for (auto& s : o.cores) cfg.cores.push_back(parse_core(s, run.r));
        cfg.max_quot = run.max_quot;
        cfg.trunc = o.trunc;
        cfg.order = o.order;
        cfg.window = o.window;
        cfg.k = o.k;
        cfg.jobs = o.jobs;
        for (auto& c : run_identity(*run.id, cfg)) {
            json row;
            row["identity"] = c.identity;
            row["params"] = params_json(c.params);
            row["status"] = status_name(c.status);
            row["gated"] = c.gated;
            row["lhs"] = c.lhs;
            row["rhs"] = c.rhs;
            row["note"] = c.note;
            rows.push_back(row);
            if (!c.gated) {
                ++ungated;
                continue;
            }
            if (c.status == Status::pass) ++pass;
            else if (c.status == Status::fail) ++fail;
            else ++skipped;
        }
    }
    doc["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"experimental", ungated}};
    doc["rows"] = rows;
    emit(doc, o);
    std::cerr << "verify: " << pass << " pass, " << fail << " fail, " << skipped << " skipped";
    if (ungated) std::cerr << ", " << ungated << " experimental";
    std::cerr << "\n";
    return fail ? failure : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wreath Macdonald polynomials: tables and identity checks"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--r", o.r, "number of colors")->check(CLI::PositiveNumber);
        c->add_option("--core", o.cores, "core as charges a,b,... or as a partition (p1,p2,...); repeatable");
        c->add_option("--max-quot", o.max_quot, "largest quotient size")->check(CLI::NonNegativeNumber);
        c->add_option("--trunc", o.trunc, "truncation degree N for series identities");
        c->add_option("--order", o.order, "q,t-series order M")->check(CLI::PositiveNumber);
        c->add_option("--window", o.window, "z-exponent window for constant terms");
        c->add_option("--k", o.k, "keep only instances with this k");
        c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        c->add_option("--out", o.out, "output file (default stdout)");
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto compute = app.add_subcommand("compute", "H, Hdag, N and nabla eigenvalues");
    auto verify = app.add_subcommand("verify", "run identity checks");
    auto kostka_cmd = app.add_subcommand("kostka", "wreath (q,t)-Kostka coefficients");
    auto fock = app.add_subcommand("fock", "Fock space matrix elements and boson eigenvalues");
    auto ddiag = app.add_subcommand("ddiag", "constant-term D series on H against its eigenvalues");
    for (auto* c : {compute, verify, kostka_cmd, fock, ddiag}) common(c);
    verify->add_option("identity", o.identity, "identity id or 'all'");
    verify->add_option("--suite", o.suite, "preset suite: desk or slow");
    fock->add_option("--lambda", o.lambda, "partition, comma separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }
    if (o.r == 2) std::cerr << "warning: r = 2 is experimental; results are reported but not gated\n";
    try {
        if (*compute) return cmd_compute(o);
        if (*verify) return cmd_verify(o);
        if (*kostka_cmd) return cmd_kostka(o);
        if (*fock) return cmd_fock(o);
        if (*ddiag) return cmd_ddiag(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return config_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return ok;
}
