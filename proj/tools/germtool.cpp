#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "germ/germfile.hpp"
#include "germ/invariants.hpp"

using namespace germ;

namespace {

struct Job {
    std::string file;
    int k = 2;
    std::string order = "local";
    unsigned seed = 1;
    std::string format = "text";

    Mode mode() const { return order == "global" ? Mode::Global : Mode::Local; }
    bool structured() const { return format == "structured"; }
};

std::string show(const Ideal& I, Mode mode) {
    auto s = I.simplified(mode);
    if (s.is_unit(mode)) return "unit ideal (empty germ)";
    if (s.has_no_generators()) return "zero ideal";
    std::string out;
    for (const auto& g : s.generators()) {
        if (!out.empty()) out += "; ";
        out += g.to_string();
    }
    return out;
}

void emit(const Job& job, const std::string& key, const std::string& value) {
    if (job.structured()) std::cout << key << ": " << value << "\n";
    else std::cout << value << "\n";
}

void preamble(const Job& job, const std::string& command) {
    if (job.structured()) {
        std::cout << "command: " << command << "\n"
                  << "input: " << job.file << "\n"
                  << "order: " << job.order << "\n"
                  << "seed: " << job.seed << "\n";
    }
}

int print_audit(const Job& job, const HypothesisAudit& audit) {
    for (const auto& it : audit.items) {
        const char* s = it.status == HypothesisAudit::Status::Pass   ? "PASS"
                        : it.status == HypothesisAudit::Status::Fail ? "FAIL"
                                                                     : "ASSUMED";
        if (job.structured())
            std::cout << "hypothesis: " << s << " " << it.name
                      << (it.detail.empty() ? "" : " -- " + it.detail) << "\n";
        else
            std::cout << s << " " << it.name << (it.detail.empty() ? "" : ": " + it.detail)
                      << "\n";
    }
    return audit.applicable() ? 0 : 1;
}

int cmd_present(const Job& job, const MultiGerm& g) {
    preamble(job, "present");
    for (const auto& b : g.branches) {
        auto form = detect_form(b);
        auto lam = branch_presentation(b, g.target);
        if (job.structured()) {
            std::cout << "branch: " << b.name << "\n"
                      << "form: "
                      << (form.kind == BranchForm::Kind::Graph ? "graph" : "weierstrass") << "\n"
                      << "rows: " << lam.row_count() << "\n";
            for (std::size_t i = 0; i < lam.row_count(); ++i)
                for (std::size_t j = 0; j < lam.col_count(); ++j)
                    std::cout << "entry " << i << " " << j << ": " << lam.at(i, j).to_string()
                              << "\n";
        } else {
            std::cout << "branch " << b.name << " ("
                      << (form.kind == BranchForm::Kind::Graph ? "graph" : "weierstrass")
                      << " form), presentation:\n"
                      << lam.to_string();
        }
    }
    return 0;
}

int cmd_fitting(const Job& job, const MultiGerm& g) {
    preamble(job, "fitting");
    auto lad = FittingLadder::of(g);
    emit(job, "ideal", show(lad.total_fitting(job.k), job.mode()));
    return 0;
}

int cmd_target_mk(const Job& job, const MultiGerm& g) {
    preamble(job, "target-mk");
    emit(job, "ideal", show(target_space(g, job.k), job.mode()));
    return 0;
}

int cmd_source_dk(const Job& job, const MultiGerm& g) {
    preamble(job, "source-dk");
    auto ideals = source_multipoint(g, job.k);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (job.structured())
            std::cout << "branch: " << g.branches[i].name << "\n";
        else
            std::cout << "over source point of " << g.branches[i].name << ":\n";
        emit(job, "ideal", show(ideals[i], job.mode()));
    }
    return 0;
}

int cmd_verify(const Job& job, const MultiGerm& g, const std::string& what) {
    preamble(job, "verify " + what);
    auto lad = FittingLadder::of(g);
    auto verdict = [&](bool ok, const std::string& detail) {
        emit(job, "verified", std::string(ok ? "yes" : "NO") + (detail.empty() ? "" : ": " + detail));
        return ok ? 0 : 1;
    };

    if (what == "expansion") {
        for (int k = 0; k <= static_cast<int>(lad.total_size()); ++k)
            if (!equals(branch_expansion(lad, k), lad.total_fitting(k), Mode::Global))
                return verdict(false, "branch expansion differs from the block minors at k=" +
                                          std::to_string(k));
        return verdict(true, "branch expansion matches the block minors");
    }
    if (what == "double-formula") {
        auto res = double_formula(lad);
        int audit_rc = print_audit(job, res.audit);
        bool eq = equals(lad.total_fitting(1), res.rhs, job.mode());
        emit(job, "rhs", show(res.rhs, job.mode()));
        int rc = verdict(eq, eq ? "" : "double point formula does not reproduce F_1");
        return audit_rc ? audit_rc : rc;
    }
    if (what == "triple-formula") {
        auto res = triple_formula(lad);
        int audit_rc = print_audit(job, res.audit);
        bool eq = equals(lad.total_fitting(2), res.rhs, job.mode());
        emit(job, "rhs", show(res.rhs, job.mode()));
        int rc = verdict(eq, eq ? "" : "triple point formula does not reproduce F_2");
        return audit_rc ? audit_rc : rc;
    }
    if (what == "decomposition")
        return verdict(decomposition_check(lad, job.k),
                       "set-theoretic decomposition of M_" + std::to_string(job.k));
    if (what == "preimage")
        return verdict(preimage_compare(g, job.k),
                       "source spaces against preimages of target spaces, k=" +
                           std::to_string(job.k));
    throw error("unknown verification '" + what + "'");
}

int cmd_invariants(const Job& job, const MultiGerm& g, const std::string& what, long r_branches) {
    preamble(job, "invariants " + what);
    RandomizationPolicy policy{job.seed};

    if (what == "quadruple") {
        auto q = quadruple_count(g);
        emit(job, "quadruple-count", q.get_str());
        if (q.get_den() != 1) emit(job, "warning", "quadruple count is not an integer");
        return 0;
    }
    if (what == "intersection") {
        // the two components of the triple point space: the own triple locus
        // of the unique non-immersive branch, and the cross-branch part
        auto lad = FittingLadder::of(g);
        std::optional<std::size_t> fat;
        for (std::size_t i = 0; i < lad.branch_count(); ++i)
            if (!lad.branch_fitting(i, 2).is_unit(Mode::Local)) {
                if (fat) throw error("more than one branch has its own triple points");
                fat = i;
            }
        if (!fat) throw error("no branch has its own triple points");
        std::optional<Ideal> cross;
        for (std::size_t i = 0; i < lad.branch_count(); ++i)
            for (std::size_t j = i + 1; j < lad.branch_count(); ++j) {
                for (const auto& piece : {sum(lad.branch_fitting(i, 1), lad.branch_fitting(j, 0)),
                                          sum(lad.branch_fitting(i, 0), lad.branch_fitting(j, 1))})
                    if (!piece.is_unit(Mode::Local))
                        cross = cross ? intersect(*cross, piece) : piece;
            }
        if (!cross) throw error("no cross-branch triple points");
        emit(job, "intersection-number",
             std::to_string(intersection_number(lad.branch_fitting(*fat, 2), *cross)));
        return 0;
    }

    auto curve = target_space(g, job.k);
    if (dimension(curve, job.mode()) != 1)
        throw error("M_" + std::to_string(job.k) + " is not a curve; invariant undefined");
    if (what == "m0") {
        emit(job, "m0", std::to_string(multiplicity_m0(curve, policy)));
        return 0;
    }
    long m0 = multiplicity_m0(curve, policy);
    long m1 = polar_m1(curve.simplified(Mode::Global), policy);
    if (what == "m1") {
        emit(job, "m1", std::to_string(m1));
        return 0;
    }
    long mu = milnor_from_polar(m0, m1);
    if (what == "milnor") {
        emit(job, "milnor", std::to_string(mu));
        return 0;
    }
    if (what == "delta") {
        emit(job, "delta", std::to_string(delta_from_milnor(mu, r_branches)));
        return 0;
    }
    throw error("unknown invariant '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple point spaces of finite map germs"};
    app.require_subcommand(1);

    Job job;
    std::string what;
    long r_branches = 1;

    auto add_common = [&](CLI::App* sub, bool with_k, int default_k) {
        sub->add_option("file", job.file, "germ description file")->required();
        if (with_k) {
            job.k = default_k;
            sub->add_option("--k", job.k, "multiple point index k");
        }
        sub->add_option("--order", job.order, "local (germ at the origin) or global")
            ->check(CLI::IsMember({"local", "global"}));
        sub->add_option("--seed", job.seed, "seed for generic choices");
        sub->add_option("--format", job.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* present = app.add_subcommand("present", "branch presentation matrices");
    add_common(present, false, 0);
    auto* fitting = app.add_subcommand("fitting", "k-th Fitting ideal of the germ");
    add_common(fitting, true, 1);
    auto* target_mk = app.add_subcommand("target-mk", "k-fold target multiple point space M_k");
    add_common(target_mk, true, 2);
    auto* source_dk = app.add_subcommand("source-dk", "k-fold source multiple point space D2_k");
    add_common(source_dk, true, 2);
    auto* verify = app.add_subcommand("verify", "check an identity or formula");
    verify
        ->add_option("check", what,
                     "expansion | double-formula | triple-formula | decomposition | preimage")
        ->required()
        ->check(CLI::IsMember(
            {"expansion", "double-formula", "triple-formula", "decomposition", "preimage"}));
    add_common(verify, true, 2);
    auto* invariants = app.add_subcommand("invariants", "curve invariants of multiple point spaces");
    invariants->add_option("quantity", what, "m0 | m1 | milnor | delta | intersection | quadruple")
        ->required()
        ->check(CLI::IsMember({"m0", "m1", "milnor", "delta", "intersection", "quadruple"}));
    add_common(invariants, true, 3);
    invariants->add_option("--r", r_branches, "number of branches of the curve (for delta)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    MultiGerm g;
    try {
        g = load_germ_file(job.file);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (present->parsed()) return cmd_present(job, g);
        if (fitting->parsed()) return cmd_fitting(job, g);
        if (target_mk->parsed()) return cmd_target_mk(job, g);
        if (source_dk->parsed()) return cmd_source_dk(job, g);
        if (verify->parsed()) return cmd_verify(job, g, what);
        if (invariants->parsed()) return cmd_invariants(job, g, what, r_branches);
    } catch (const error& e) {
        std::cerr << "diagnostic: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
