/* Command line front end. Forms are read as "n;a_0,...,a_n", one per line,
   from --form options or else from standard input. */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "wdr/error.hpp"
#include "wdr/localdata.hpp"
#include "wdr/modp.hpp"
#include "wdr/reduce.hpp"
#include "wdr/sieve.hpp"
#include "wdr/weakdiv.hpp"

using namespace wdr;
using nlohmann::json;

namespace {

std::vector<BinaryForm> read_forms(const std::vector<std::string> &given)
{
    std::vector<BinaryForm> out;
    for (const auto &s : given)
        out.push_back(BinaryForm::parse(s));
    if (!given.empty())
        return out;
    std::string line;
    while (std::getline(std::cin, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        out.push_back(BinaryForm::parse(line.substr(b)));
    }
    return out;
}

json int_list(const std::vector<Integer> &v)
{
    json a = json::array();
    for (const auto &x : v)
        a.push_back(to_string(x));
    return a;
}

std::string parts_text(const SplittingProfile &prof)
{
    std::ostringstream os;
    for (size_t i = 0; i < prof.parts.size(); i++) {
        const auto &q = prof.parts[i];
        os << (i ? ";" : "") << '(' << q.e << ',' << q.f << ',' << (q.locally_maximal ? 1 : 0) << ')';
    }
    return os.str();
}

std::string descriptor_text(const std::optional<PseudoMaxDescriptor> &d)
{
    if (!d)
        return "";
    std::ostringstream os;
    os << to_string(d->kase) << ":r=" << d->r << ":c=";
    for (size_t i = 0; i < d->conductor.size(); i++)
        os << (i ? "/" : "") << d->conductor[i];
    return os.str();
}

void cmd_factor_modp(const std::vector<std::string> &forms, const std::string &p)
{
    const Integer P(p);
    for (const auto &f : read_forms(forms)) {
        FactorModP fac = factor_modp(f, P);
        DoubleRootProfile prof = double_root_profile(f, P);
        json factors = json::array();
        for (const auto &mf : fac.factors)
            factors.push_back({{"coeffs", int_list(mf.coeffs)}, {"e", mf.e}});
        json row = {{"form", f.str()},
                    {"p", p},
                    {"unit", to_string(fac.unit)},
                    {"factors", factors},
                    {"infinity", fac.infinity_multiplicity},
                    {"profile", to_string(prof.kind)},
                    {"reason", to_string(prof.reason)}};
        if (prof.root)
            row["root"] = to_string(*prof.root);
        std::cout << row.dump() << '\n';
    }
}

void cmd_density(unsigned n, const std::vector<uint64_t> &ps)
{
    std::cout << "n,p,V,W,c_p_num,c_p_den\n";
    for (uint64_t p : ps) {
        SingularDensity d = singular_density(n, p);
        std::cout << n << ',' << p << ',' << d.V << ',' << d.W << ',' << d.c_p.get_num() << ',' << d.c_p.get_den()
                  << '\n';
    }
}

void cmd_ring(const std::vector<std::string> &forms, const std::string &m, const std::string &l)
{
    for (const auto &f : read_forms(forms)) {
        RingPresentation R = m.empty() ? canonical_basis_ring(f)
                                       : weakly_divisible_ring(f, {Integer(m), Integer(l.empty() ? "0" : l)});
        for (unsigned i = 0; i < R.n; i++)
            for (unsigned j = 0; j < R.n; j++)
                std::cout << json{{"form", f.str()},
                                  {"label", R.basis_names[i] + "*" + R.basis_names[j]},
                                  {"row", i},
                                  {"col", j},
                                  {"coeffs", int_list(R.product(i, j))}}
                                 .dump()
                          << '\n';
        std::cout << json{{"form", f.str()}, {"disc", to_string(ring_disc(R))}}.dump() << '\n';
    }
}

void cmd_weakdiv(const std::vector<std::string> &forms, const std::string &m)
{
    for (const auto &f : read_forms(forms)) {
        auto w = find_witness(f, Integer(m));
        json row = {{"form", f.str()}, {"m", m}, {"l", nullptr}};
        if (w)
            row["l"] = to_string(w->l);
        std::cout << row.dump() << '\n';
    }
}

void cmd_uwd(const std::vector<std::string> &forms, bool with_max)
{
    for (const auto &f : read_forms(forms)) {
        const Factorization fac = factor_integer(discriminant(f));
        UwdReport rep = is_uwd(f, fac);
        for (const auto &row : rep.per_prime) {
            json j = {{"form", f.str()},
                      {"p", to_string(row.p)},
                      {"v", row.disc_valuation},
                      {"profile", to_string(row.profile.kind)},
                      {"verdict", to_string(row.verdict)}};
            if (row.profile.root)
                j["root"] = to_string(*row.profile.root);
            std::cout << j.dump() << '\n';
        }
        json summary = {{"form", f.str()}, {"is_uwd", rep.is_uwd}};
        if (with_max && rep.is_uwd) {
            MaxWitness mw = max_witness(f, fac);
            summary["m_f"] = to_string(mw.m_f);
            summary["l_f"] = to_string(mw.l_f);
            summary["s"] = to_string(mw.s);
        }
        std::cout << summary.dump() << '\n';
    }
}

void cmd_dedekind(const std::vector<std::string> &forms, const std::string &p)
{
    std::cout << "form,p,parts,maximal\n";
    for (const auto &f : read_forms(forms)) {
        SplittingProfile prof = dedekind_kummer(f, Integer(p));
        std::cout << '"' << f.str() << "\"," << p << ',' << parts_text(prof) << ',' << (prof.maximal() ? 1 : 0)
                  << '\n';
    }
}

void cmd_classify(const std::vector<std::string> &forms, const std::string &m, const std::string &l)
{
    std::cout << "form,m,l,p,kind,disc_valuation,descriptor,restricted_sudo_maximal\n";
    for (const auto &f : read_forms(forms)) {
        WeakDivWitness w{Integer(m), 0};
        if (l.empty()) {
            auto found = find_witness(f, w.m);
            if (!found)
                throw DomainError("classify: " + f.str() + " has no witness for m = " + m);
            w = *found;
        } else
            w.l = Integer(l);
        OrderClass oc = classify_order(f, w);
        const std::string head = '"' + f.str() + "\"," + m + ',' + to_string(w.l) + ',';
        for (const auto &pc : oc.primes)
            std::cout << head << to_string(pc.p) << ',' << to_string(pc.kind) << ',' << pc.disc_valuation << ','
                      << descriptor_text(pc.descriptor) << ',' << (oc.restricted_sudo_maximal ? 1 : 0) << '\n';
        if (oc.primes.empty())
            std::cout << head << ",,,," << (oc.restricted_sudo_maximal ? 1 : 0) << '\n';
    }
}

void cmd_count_orders(const std::string &profile_file, const std::vector<std::string> &forms, uint64_t X)
{
    std::unique_ptr<ProfileSource> src;
    if (!profile_file.empty()) {
        std::ifstream in(profile_file);
        if (!in)
            throw DomainError("count-orders: cannot open " + profile_file);
        src = std::make_unique<FileProfileSource>(FileProfileSource::parse(in));
    } else {
        auto fs = read_forms(forms);
        if (fs.size() != 1)
            throw DomainError("count-orders: give exactly one form or a profile file");
        src = std::make_unique<FormProfileSource>(fs.front());
    }
    OrderCount oc = count_restricted_sudo_maximal(*src, X);
    std::cout << "N,coeff,partial,zeta_coeff,zeta_partial\n";
    for (uint64_t N = 1; N <= X; N++)
        std::cout << N << ',' << oc.coeff[N] << ',' << oc.partial[N] << ',' << oc.zeta_coeff[N] << ','
                  << oc.zeta_partial[N] << '\n';
}

void cmd_reduce(const std::vector<std::string> &forms, const std::string &m, const std::string &l, unsigned bits)
{
    for (const auto &f : read_forms(forms)) {
        const Integer M(m);
        GramProfile prof = gram_profile(f, M, bits);
        const bool ok = is_normally_minkowski_reduced(prof);
        std::cout << "form " << f.str() << "\nm " << m << '\n';
        for (size_t k = 0; k < prof.t.size(); k++)
            std::cout << "t_" << k + 1 << ' ' << prof.t[k].str(20, std::ios_base::scientific) << '\n';
        std::cout << "places " << prof.real_places << ',' << prof.complex_places << "\nbits " << prof.bits
                  << "\nreduced " << (ok ? "yes" : "no") << '\n';
        if (f.degree() >= 3 && M == 1)
            std::cout << "rho_f " << rho_f(prof).str(20, std::ios_base::scientific) << '\n';
        if (ok && f.degree() >= 2) {
            std::optional<WeakDivWitness> w;
            if (!l.empty())
                w = WeakDivWitness{M, Integer(l)};
            else
                w = find_witness(f, M);
            if (w && is_witness(f, *w))
                std::cout << "key " << canonical_representative(f, *w, bits).str() << '\n';
        }
    }
}

int cmd_sieve(const std::string &config, const std::string &out, int shards, int threads)
{
    SieveConfig cfg = load_sieve_config(config);
    if (!out.empty())
        cfg.out = out;
    if (shards > 0)
        cfg.shards = static_cast<unsigned>(shards);
    if (threads > 0)
        cfg.threads = static_cast<unsigned>(threads);
    cfg.validate();
    SieveReport rep = run_sieve(cfg);
    if (!cfg.out.empty())
        write_report(rep, cfg.out);
    std::cout << rep.csv();
    for (const auto &note : rep.notes)
        std::cerr << "note: " << note << '\n';
    if (rep.budget_exhausted) {
        std::cerr << "budget of " << cfg.budget << " candidates exhausted; output is partial\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"binary forms, weakly divisible rings and the coefficient-box sieve"};
    app.require_subcommand(1);
    std::vector<std::string> forms;
    std::string p, m = "1", l, profile_file, config, out;
    unsigned n = 3, degree = 1, bits = kDefaultBits;
    uint64_t X = 100;
    std::vector<uint64_t> ps;
    bool with_max = false;
    int shards = 0, threads = 0, rc = 0;

    auto forms_opt = [&](CLI::App *sub) { sub->add_option("--form", forms, "form n;a_0,...,a_n (repeatable)"); };

    auto *fm = app.add_subcommand("factor-modp", "factorization and double root profile mod p (JSON lines)");
    forms_opt(fm);
    fm->add_option("--p", p, "prime")->required();
    auto *hpf = app.add_subcommand("hpf", "number of monic irreducibles of degree f over F_p");
    hpf->add_option("--p", p, "prime")->required();
    hpf->add_option("--f", degree, "degree")->required();
    auto *den = app.add_subcommand("density", "|V_n(F_p)|, |W_n(F_p)| and c_p (CSV)");
    den->add_option("--n", n, "degree")->required();
    den->add_option("--p", ps, "primes")->required()->delimiter(',');
    auto *ring = app.add_subcommand("ring", "structure table of R_f, or of R' with --m/--l (JSON lines)");
    forms_opt(ring);
    ring->add_option("--m", m, "witness modulus");
    ring->add_option("--l", l, "witness point");
    auto *wd = app.add_subcommand("weakdiv", "least witness l for m (JSON lines)");
    forms_opt(wd);
    wd->add_option("--m", m, "modulus")->required();
    auto *uwd = app.add_subcommand("uwd", "per prime UWD verdicts (JSON lines)");
    forms_opt(uwd);
    uwd->add_flag("--max-witness", with_max, "append (m_f, l_f, s) for UWD forms");
    auto *ded = app.add_subcommand("dedekind", "splitting profile at p by the Dedekind criterion (CSV)");
    forms_opt(ded);
    ded->add_option("--p", p, "prime")->required();
    auto *cls = app.add_subcommand("classify", "local classification of R' (CSV)");
    forms_opt(cls);
    cls->add_option("--m", m, "witness modulus");
    cls->add_option("--l", l, "witness point; searched when omitted");
    auto *cnt = app.add_subcommand("count-orders", "restricted sudo-maximal order counts against zeta (CSV)");
    forms_opt(cnt);
    cnt->add_option("--profile", profile_file, "profile file, lines p: (e,f,max);...");
    cnt->add_option("--X", X, "bound")->required();
    auto *red = app.add_subcommand("reduce", "Gram profile, reduction verdict and canonical key");
    forms_opt(red);
    red->add_option("--m", m, "modulus");
    red->add_option("--l", l, "witness point; searched when omitted");
    red->add_option("--bits", bits, "working precision");
    auto *sv = app.add_subcommand("sieve", "coefficient box sieve; exit code 2 when the budget runs out");
    sv->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
    sv->add_option("--out", out, "output prefix, overrides the config");
    sv->add_option("--shards", shards, "number of shards");
    sv->add_option("--threads", threads, "shards run at once");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*fm)
            cmd_factor_modp(forms, p);
        else if (*hpf)
            std::cout << count_H(Integer(p), degree) << '\n';
        else if (*den)
            cmd_density(n, ps);
        else if (*ring)
            cmd_ring(forms, ring->count("--m") ? m : "", l);
        else if (*wd)
            cmd_weakdiv(forms, m);
        else if (*uwd)
            cmd_uwd(forms, with_max);
        else if (*ded)
            cmd_dedekind(forms, p);
        else if (*cls)
            cmd_classify(forms, m, l);
        else if (*cnt)
            cmd_count_orders(profile_file, forms, X);
        else if (*red)
            cmd_reduce(forms, m, l, bits);
        else if (*sv)
            rc = cmd_sieve(config, out, shards, threads);
    } catch (const BudgetError &e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
