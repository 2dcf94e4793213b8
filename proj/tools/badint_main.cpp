// badint: CLI front end for the interval-anatomy library.
//
// Subcommand style; every report embeds the config used so completeness
// claims (hmax, a_cap, ybound, ...) are never silent.  Output formats:
// csv (default), json, bfile (single sequences only).  Exit codes:
// 0 ok, 2 precondition violation, 3 internal invariant violation.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "anatomy/core_arith.hpp"
#include "anatomy/diophantine.hpp"
#include "anatomy/enumerate.hpp"
#include "anatomy/factorial_square.hpp"
#include "anatomy/interval.hpp"
#include "anatomy/io.hpp"
#include "anatomy/probes.hpp"
#include "anatomy/smooth.hpp"

namespace {

constexpr const char* kVersion = "badint 1.0.0";

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> header;              // csv column names
    std::vector<std::vector<std::string>> rows;
    bool bfile_ok = false;  // eligible for bfile output (single sequence)
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool dot = false, exp = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') continue;
        if (c == '.' && !dot && !exp) { dot = true; continue; }
        if ((c == 'e' || c == 'E') && !exp && i + 1 < s.size()) {
            exp = true;
            if (s[i + 1] == '-' || s[i + 1] == '+') ++i;
            continue;
        }
        return false;
    }
    return true;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << "{\"version\":\"" << kVersion << "\",\"command\":\""
            << json_escape(r.command) << "\",\"config\":{";
        for (size_t i = 0; i < r.config.size(); ++i) {
            if (i) out << ',';
            out << '"' << json_escape(r.config[i].first) << "\":\""
                << json_escape(r.config[i].second) << '"';
        }
        out << "},\"columns\":[";
        for (size_t i = 0; i < r.header.size(); ++i) {
            if (i) out << ',';
            out << '"' << json_escape(r.header[i]) << '"';
        }
        out << "],\"rows\":[";
        for (size_t i = 0; i < r.rows.size(); ++i) {
            if (i) out << ',';
            out << '[';
            for (size_t j = 0; j < r.rows[i].size(); ++j) {
                if (j) out << ',';
                const std::string& cell = r.rows[i][j];
                if (looks_numeric(cell))
                    out << cell;
                else
                    out << '"' << json_escape(cell) << '"';
            }
            out << ']';
        }
        out << "]}\n";
        return;
    }
    // csv and bfile share the comment header
    out << "# " << kVersion << " command=" << r.command;
    for (auto& [k, v] : r.config) out << ' ' << k << '=' << v;
    out << '\n';
    if (format == "bfile") {
        if (!r.bfile_ok)
            throw std::invalid_argument(
                "bfile format only supports single-sequence output");
        for (size_t i = 0; i < r.rows.size(); ++i)
            out << (i + 1) << ' ' << r.rows[i].back() << '\n';
        return;
    }
    anatomy::write_csv_row(out, r.header);
    for (auto& row : r.rows) anatomy::write_csv_row(out, row);
}

std::string fmt_double(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

std::string fmt_complex(const std::complex<double>& z) {
    std::ostringstream ss;
    ss.precision(12);
    ss << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace anatomy;

    CLI::App app{"interval anatomy toolkit: bad / very bad / type-F3 "
                 "intervals and the factorial equation a1!a2!a3!=m^2"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format = "csv";
    std::string output = "-";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "bfile"}));
    app.add_option("--output", output, "output path ('-' for stdout)");

    // ---- enumerate <set> --x [--hmax] [--include-one] ----
    std::string en_set;
    uint64_t en_x = 100;
    uint64_t en_hmax = 0;  // 0 = module default
    bool en_no_one = false;
    auto* en = app.add_subcommand("enumerate", "enumerate a set up to x");
    en->add_option("set", en_set, "one of B1,B,VB1,VB,F31,F3")->required();
    en->add_option("--x", en_x, "upper bound")->required();
    en->add_option("--hmax", en_hmax, "max interval length (0 = default)");
    en->add_flag("--exclude-one", en_no_one, "exclude 1 from B1/B");

    // ---- counts --x --step --sets ----
    uint64_t ct_x = 1000, ct_step = 100;
    std::vector<std::string> ct_sets{"B1", "B", "VB1", "F31", "F3"};
    auto* ct = app.add_subcommand("counts", "cumulative count table");
    ct->add_option("--x", ct_x)->required();
    ct->add_option("--step", ct_step);
    ct->add_option("--sets", ct_sets, "set names");

    // ---- verify-oeis <set> --bfile --x ----
    std::string vo_set, vo_bfile;
    uint64_t vo_x = 100000;
    bool vo_exclude_one = false;
    auto* vo = app.add_subcommand("verify-oeis",
                                  "cross-check a sequence against a b-file");
    vo->add_option("set", vo_set)->required();
    vo->add_option("--bfile", vo_bfile)->required();
    vo->add_option("--x", vo_x);
    vo->add_flag("--exclude-one", vo_exclude_one);

    // ---- classify --n --h ----
    uint64_t cl_n = 0, cl_h = 1;
    auto* cl = app.add_subcommand(
        "classify", "interval verdicts and witnesses for {n+1..n+h}");
    cl->set_help_flag("--help", "print help");  // frees -h for --h
    cl->add_option("--n", cl_n, "left endpoint minus one")->required();
    cl->add_option("--h", cl_h, "interval length")->required();

    // ---- pell --d | --u --v [--ybound] ----
    uint64_t pe_d = 0, pe_u = 0, pe_v = 0, pe_ybound = 1000000;
    auto* pe = app.add_subcommand("pell", "Pell / Pell-type solver");
    pe->add_option("--d", pe_d, "x^2 - d y^2 = 1 fundamental solution");
    pe->add_option("--u", pe_u, "u x^2 - v y^2 = 1 scan");
    pe->add_option("--v", pe_v);
    pe->add_option("--ybound", pe_ybound);

    // ---- hyperbola --a --b --h --x ----
    uint64_t hy_a = 1, hy_b = 1, hy_x = 1000;
    int64_t hy_h = 1;
    auto* hy = app.add_subcommand("hyperbola", "count a n^2 + h = b m^2");
    hy->set_help_flag("--help", "print help");
    hy->add_option("--a", hy_a)->required();
    hy->add_option("--b", hy_b)->required();
    hy->add_option("--h", hy_h)->required();
    hy->add_option("--x", hy_x)->required();

    // ---- powerful-linear --a --b --h --x ----
    uint64_t pl_a = 1, pl_b = 1, pl_x = 1000000;
    int64_t pl_h = 1;
    auto* pl = app.add_subcommand("powerful-linear",
                                  "count powerful n,m with a n + h = b m");
    pl->set_help_flag("--help", "print help");
    pl->add_option("--a", pl_a)->required();
    pl->add_option("--b", pl_b)->required();
    pl->add_option("--h", pl_h)->required();
    pl->add_option("--x", pl_x)->required();

    // ---- factorial-square --x [--hmax] ----
    uint64_t fs_x = 1000, fs_hmax = 64;
    auto* fs = app.add_subcommand("factorial-square",
                                  "solutions of a1!a2!a3!=m^2 with a3<=x");
    fs->add_option("--x", fs_x)->required();
    fs->add_option("--hmax", fs_hmax, "max a3-a2");

    // ---- constants --which --precision ----
    std::string co_which = "erdos-szekeres";
    double co_prec = 1e-6;
    auto* co = app.add_subcommand("constants", "certified constants");
    co->add_option("--which", co_which)
        ->check(CLI::IsMember({"erdos-szekeres", "c31"}));
    co->add_option("--precision", co_prec);

    // ---- char-sum --q --z [--index] ----
    uint64_t cs_q = 3, cs_z = 1000;
    int64_t cs_index = -1;  // -1 = all characters
    auto* cs = app.add_subcommand("char-sum",
                                  "normalized prime character sums s_Z(chi)");
    cs->add_option("--q", cs_q, "cubefree modulus")->required();
    cs->add_option("--z", cs_z, "scale Z (primes in [Z,2Z))")->required();
    cs->add_option("--index", cs_index, "character index (-1 = all)");

    // ---- exceptional --z --qmax [--exponent] ----
    uint64_t ex_z = 1000, ex_qmax = 50;
    double ex_exp = 0.008;
    auto* ex = app.add_subcommand(
        "exceptional", "scan for exceptional characters |s_Z| >= Z^-exp");
    ex->add_option("--z", ex_z)->required();
    ex->add_option("--qmax", ex_qmax)->required();
    ex->add_option("--exponent", ex_exp);

    // ---- sieve-report --start --length --moduli --omega-class ... ----
    int64_t sr_start = 1;
    uint64_t sr_length = 100, sr_k = 1;
    std::vector<uint64_t> sr_moduli{2, 3, 5};
    auto* sr = app.add_subcommand(
        "sieve-report",
        "survivors and large-sieve denominator (class 0 removed per modulus)");
    sr->add_option("--start", sr_start);
    sr->add_option("--length", sr_length)->required();
    sr->add_option("--moduli", sr_moduli, "pairwise coprime moduli");
    sr->add_option("--k", sr_k);

    // ---- fracparts --n --p [--j] [--bins] ----
    uint64_t fp_n = 12167, fp_p = 64;
    uint32_t fp_j = 1, fp_bins = 10;
    auto* fp = app.add_subcommand("fracparts",
                                  "histogram of {N/p^j}, p in [P,2P)");
    fp->add_option("--n", fp_n)->required();
    fp->add_option("--p", fp_p)->required();
    fp->add_option("--j", fp_j)->check(CLI::Range(1u, 2u));
    fp->add_option("--bins", fp_bins);

    // ---- psi --x --y ----
    uint64_t ps_x = 1000, ps_y = 10;
    auto* ps = app.add_subcommand("psi", "smooth counting function Psi(x,y)");
    ps->add_option("--x", ps_x)->required();
    ps->add_option("--y", ps_y)->required();

    // ---- b1-identity --x ----
    uint64_t bi_x = 1000;
    auto* bi = app.add_subcommand(
        "b1-identity", "check #B1 cap [1,x] = sum over p of Psi(x/p^2, p)");
    bi->add_option("--x", bi_x)->required();

    // allow global --format/--output after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    try {
        if (*en) {
            auto id = parse_set_name(en_set);
            if (!id) throw std::invalid_argument("unknown set: " + en_set);
            bool include_one = !en_no_one;
            uint64_t hmax = en_hmax;
            std::vector<uint64_t> seq;
            switch (*id) {
                case SetId::B1: seq = enumerate_b1(en_x, include_one); break;
                case SetId::B:
                    if (!hmax) hmax = kDefaultHmaxBad;
                    seq = enumerate_b(en_x, hmax, include_one);
                    break;
                case SetId::VB1: seq = enumerate_vb1(en_x); break;
                case SetId::VB:
                    if (!hmax) hmax = kDefaultHmaxVb;
                    seq = enumerate_vb(en_x, hmax);
                    break;
                case SetId::F31: seq = enumerate_f31(en_x); break;
                case SetId::F3:
                    if (!hmax) hmax = kDefaultHmaxF3;
                    seq = enumerate_f3(en_x, hmax);
                    break;
            }
            rep.command = "enumerate";
            rep.config = {{"set", set_name(*id)},
                          {"x", std::to_string(en_x)},
                          {"hmax", hmax ? std::to_string(hmax) : "n/a"},
                          {"include_one", include_one ? "true" : "false"}};
            rep.header = {"index", "n"};
            for (size_t i = 0; i < seq.size(); ++i)
                rep.rows.push_back(
                    {std::to_string(i + 1), std::to_string(seq[i])});
            rep.bfile_ok = true;
        } else if (*ct) {
            std::vector<SetId> ids;
            for (auto& s : ct_sets) {
                auto id = parse_set_name(s);
                if (!id) throw std::invalid_argument("unknown set: " + s);
                ids.push_back(*id);
            }
            CountTable t = cumulative_counts(ct_x, ids, ct_step);
            rep.command = "counts";
            rep.config = {{"x", std::to_string(ct_x)},
                          {"step", std::to_string(ct_step)}};
            rep.header = {"t"};
            for (SetId id : t.sets) rep.header.push_back(set_name(id));
            for (size_t i = 0; i < t.thresholds.size(); ++i) {
                std::vector<std::string> row{std::to_string(t.thresholds[i])};
                for (uint64_t c : t.counts[i]) row.push_back(std::to_string(c));
                rep.rows.push_back(row);
            }
        } else if (*vo) {
            auto id = parse_set_name(vo_set);
            if (!id) throw std::invalid_argument("unknown set: " + vo_set);
            bool include_one = !vo_exclude_one;
            std::vector<uint64_t> seq;
            switch (*id) {
                case SetId::B1: seq = enumerate_b1(vo_x, include_one); break;
                case SetId::B: seq = enumerate_b(vo_x, kDefaultHmaxBad,
                                                 include_one); break;
                case SetId::VB1: seq = enumerate_vb1(vo_x); break;
                case SetId::VB: seq = enumerate_vb(vo_x); break;
                case SetId::F31: seq = enumerate_f31(vo_x); break;
                case SetId::F3: seq = enumerate_f3(vo_x); break;
            }
            auto entries = parse_bfile_path(vo_bfile);
            // only compare entries within range
            size_t usable = entries.size();
            while (usable > 0 &&
                   entries[usable - 1].value > static_cast<int64_t>(vo_x))
                --usable;
            entries.resize(usable);
            auto check = check_against_bfile(seq, entries);
            rep.command = "verify-oeis";
            rep.config = {{"set", set_name(*id)},
                          {"x", std::to_string(vo_x)},
                          {"bfile", vo_bfile}};
            rep.header = {"status", "compared", "mismatch_index", "expected",
                          "actual"};
            if (check.ok)
                rep.rows.push_back({"OK", std::to_string(check.compared), "",
                                    "", ""});
            else
                rep.rows.push_back({"MISMATCH", std::to_string(check.compared),
                                    std::to_string(check.mismatch_pos + 1),
                                    std::to_string(check.expected),
                                    std::to_string(check.actual)});
        } else if (*cl) {
            IntervalProduct ip(cl_n, cl_h);
            bool bad = !ip.merged().empty() && is_bad(ip);
            bool verybad = is_very_bad(ip);
            uint64_t acap = default_a_cap(cl_n, cl_h);
            FactorialKernelTable table = build_factorial_kernels(
                std::max<uint64_t>(acap, 300));
            auto ws = f3_witnesses(ip, table,
                                   std::min<uint64_t>(acap, cl_n ? cl_n - 1
                                                                 : 0));
            rep.command = "classify";
            rep.config = {{"n", std::to_string(cl_n)},
                          {"h", std::to_string(cl_h)},
                          {"a_cap", std::to_string(acap)}};
            rep.header = {"bad", "verybad", "f3", "p0", "witnesses_a"};
            std::string wlist;
            for (auto& w : ws) {
                if (!wlist.empty()) wlist += ' ';
                wlist += std::to_string(w.a);
            }
            rep.rows.push_back(
                {bad ? "true" : "false", verybad ? "true" : "false",
                 ws.empty() ? "false" : "true",
                 ip.merged().empty() ? "" : std::to_string(ip.largest().first),
                 wlist});
        } else if (*pe) {
            rep.command = "pell";
            rep.header = {"u", "v", "x", "y"};
            if (pe_d) {
                auto s = pell_fundamental(pe_d);
                rep.config = {{"d", std::to_string(pe_d)}};
                rep.rows.push_back({"1", std::to_string(pe_d),
                                    std::to_string(s.x), std::to_string(s.y)});
            } else if (pe_u && pe_v) {
                rep.config = {{"u", std::to_string(pe_u)},
                              {"v", std::to_string(pe_v)},
                              {"ybound", std::to_string(pe_ybound)}};
                for (auto& s : pell_like_solutions(pe_u, pe_v, pe_ybound))
                    rep.rows.push_back(
                        {std::to_string(s.u), std::to_string(s.v),
                         std::to_string(s.x), std::to_string(s.y)});
            } else {
                throw std::invalid_argument("pell: need --d or --u and --v");
            }
        } else if (*hy) {
            HyperbolaQuery q{hy_a, hy_b, hy_h, hy_x};
            uint64_t count = count_hyperbola(q);
            rep.command = "hyperbola";
            rep.config = {{"a", std::to_string(hy_a)},
                          {"b", std::to_string(hy_b)},
                          {"h", std::to_string(hy_h)},
                          {"x", std::to_string(hy_x)}};
            rep.header = {"count", "divisor_method"};
            std::string dv;
            if (is_square(hy_a * hy_b)) {
                uint64_t d = count_hyperbola_divisor(q);
                if (d != count)
                    throw std::logic_error(
                        "hyperbola: divisor method disagrees with scan");
                dv = std::to_string(d);
            }
            rep.rows.push_back({std::to_string(count), dv});
        } else if (*pl) {
            rep.command = "powerful-linear";
            rep.config = {{"a", std::to_string(pl_a)},
                          {"b", std::to_string(pl_b)},
                          {"h", std::to_string(pl_h)},
                          {"x", std::to_string(pl_x)}};
            rep.header = {"count"};
            rep.rows.push_back(
                {std::to_string(count_powerful_linear(pl_a, pl_b, pl_h,
                                                      pl_x))});
        } else if (*fs) {
            auto sols = enumerate_solutions(fs_x, fs_hmax);
            rep.command = "factorial-square";
            rep.config = {{"x", std::to_string(fs_x)},
                          {"hmax", std::to_string(fs_hmax)}};
            rep.header = {"a1", "a2", "a3"};
            for (auto& s : sols)
                rep.rows.push_back({std::to_string(s.a1), std::to_string(s.a2),
                                    std::to_string(s.a3)});
        } else if (*co) {
            CertifiedValue v = (co_which == "erdos-szekeres")
                                   ? erdos_szekeres_constant(co_prec)
                                   : c31_constant(co_prec);
            rep.command = "constants";
            rep.config = {{"which", co_which},
                          {"precision", fmt_double(co_prec)}};
            rep.header = {"value", "tail"};
            rep.rows.push_back({fmt_double(v.value), fmt_double(v.tail)});
        } else if (*cs) {
            CharacterGroup g(cs_q);
            rep.command = "char-sum";
            rep.config = {{"q", std::to_string(cs_q)},
                          {"z", std::to_string(cs_z)}};
            rep.header = {"index", "principal", "primitive", "s_Z", "abs"};
            auto add = [&](uint64_t idx) {
                auto s = char_sum(g, idx, cs_z);
                rep.rows.push_back({std::to_string(idx),
                                    g.is_principal(idx) ? "true" : "false",
                                    g.is_primitive(idx) ? "true" : "false",
                                    fmt_complex(s.value),
                                    fmt_double(std::abs(s.value))});
            };
            if (cs_index >= 0)
                add(static_cast<uint64_t>(cs_index));
            else
                for (uint64_t i = 0; i < g.size(); ++i) add(i);
        } else if (*ex) {
            std::vector<uint64_t> moduli;
            for (uint64_t q = 3; q <= ex_qmax; ++q) {
                bool cubefree = true;
                for (auto& [p, e] : factorize(q).factors)
                    if (e >= 3) cubefree = false;
                if (cubefree) moduli.push_back(q);
            }
            auto r = exceptional_scan(moduli, ex_z, ex_exp);
            rep.command = "exceptional";
            rep.config = {{"z", std::to_string(ex_z)},
                          {"qmax", std::to_string(ex_qmax)},
                          {"exponent", fmt_double(ex_exp)},
                          {"primitive_count",
                           std::to_string(r.primitive_count)},
                          {"primitive_sq_sum",
                           fmt_double(r.primitive_sq_sum)}};
            rep.header = {"q", "index", "s_Z", "abs"};
            for (auto& e : r.exceptional)
                rep.rows.push_back({std::to_string(e.chi.q),
                                    std::to_string(e.chi.index),
                                    fmt_complex(e.value),
                                    fmt_double(std::abs(e.value))});
        } else if (*sr) {
            SieveProblem prob{sr_start, sr_length, {}};
            for (uint64_t q : sr_moduli) prob.moduli.push_back({q, {0}});
            auto r = large_sieve_report(prob, sr_k);
            rep.command = "sieve-report";
            std::string ms;
            for (uint64_t q : sr_moduli) {
                if (!ms.empty()) ms += '+';
                ms += std::to_string(q);
            }
            rep.config = {{"start", std::to_string(sr_start)},
                          {"length", std::to_string(sr_length)},
                          {"moduli", ms},
                          {"k", std::to_string(sr_k)}};
            rep.header = {"survivors", "denominator"};
            rep.rows.push_back({std::to_string(r.survivors),
                                fmt_double(r.denominator)});
        } else if (*fp) {
            Histogram h = fracpart_histogram(fp_n, fp_p, fp_j, fp_bins);
            rep.command = "fracparts";
            rep.config = {{"n", std::to_string(fp_n)},
                          {"p", std::to_string(fp_p)},
                          {"j", std::to_string(fp_j)},
                          {"bins", std::to_string(fp_bins)},
                          {"samples", std::to_string(h.samples)},
                          {"chi_square", fmt_double(h.chi_square)}};
            rep.header = {"bin", "count"};
            for (size_t i = 0; i < h.bins.size(); ++i)
                rep.rows.push_back(
                    {std::to_string(i), std::to_string(h.bins[i])});
        } else if (*ps) {
            rep.command = "psi";
            rep.config = {{"x", std::to_string(ps_x)},
                          {"y", std::to_string(ps_y)}};
            rep.header = {"psi"};
            rep.rows.push_back({std::to_string(psi(ps_x, ps_y))});
        } else if (*bi) {
            uint64_t formula = b1_count_exact(bi_x);
            uint64_t direct = enumerate_b1(bi_x, false).size();
            if (formula != direct)
                throw std::logic_error("b1-identity: formula != enumeration");
            rep.command = "b1-identity";
            rep.config = {{"x", std::to_string(bi_x)}};
            rep.header = {"formula", "enumeration", "status"};
            rep.rows.push_back({std::to_string(formula),
                                std::to_string(direct), "OK"});
        }

        std::ostringstream buf;
        emit(rep, format, buf);
        if (output == "-") {
            std::cout << buf.str();
        } else {
            std::ofstream f(output);
            if (!f) throw std::invalid_argument("cannot open " + output);
            f << buf.str();
        }
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
