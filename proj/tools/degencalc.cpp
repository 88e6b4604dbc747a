// degencalc: exact verification reports for the cone degenerations of P^3.
//
// Exit codes: 0 all checks pass, 1 some check failed (or the engine hit an
// internal inconsistency), 2 usage error.

#include <degen/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

int emit(const degen::Report& report, const std::string& format) {
    std::cout << (format == "json" ? degen::to_json(report) : degen::to_text(report));
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic audit of the cone degenerations of P^3"};
    app.require_subcommand(1);
    std::string format = "text";

    degen::ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand(
        "classify", "search the nef-and-big box for anticanonical cube 64");
    classify->add_option("--max-a", classify_args.max_a, "largest fiber multiple a")
        ->capture_default_str();
    classify->add_option("--max-e", classify_args.max_e, "largest Hirzebruch index e")
        ->capture_default_str();
    classify->add_option("--max-b", classify_args.max_b, "largest excess b - ae")
        ->capture_default_str();
    classify->add_flag("--audit", classify_args.audit, "include convention notes");
    add_format(classify, format);

    degen::TableArgs table_args;
    std::string table_kind = "II";
    CLI::App* table = app.add_subcommand(
        "table", "full deformation table of the degree-d1 double cover");
    table->add_option("--type", table_kind, "model type (II or III)")
        ->required()
        ->check(CLI::IsMember({"II", "III"}));
    table->add_option("--d1", table_args.d1, "cover degree parameter (>= 5)")->required();
    table->add_flag("--audit,!--no-audit", table_args.audit, "include audit notes")
        ->capture_default_str();
    add_format(table, format);

    degen::CohArgs coh_args;
    std::string level = "surface";
    CLI::App* coh = app.add_subcommand("coh", "line bundle cohomology dimensions");
    coh->add_option("--level", level, "surface or threefold")
        ->required()
        ->check(CLI::IsMember({"surface", "threefold"}));
    coh->add_option("--e", coh_args.e, "Hirzebruch index of the base")->required();
    coh->add_option("--a", coh_args.a, "section coefficient")->required();
    coh->add_option("--b", coh_args.b, "fiber coefficient")->required();
    coh->add_option("--m", coh_args.m, "E coefficient (threefold)")->capture_default_str();
    coh->add_option("--d0a", coh_args.d0a, "twist class, section part (threefold)")
        ->capture_default_str();
    coh->add_option("--d0b", coh_args.d0b, "twist class, fiber part (threefold)")
        ->capture_default_str();
    coh->add_flag("--audit", coh_args.audit, "include convention notes");
    add_format(coh, format);

    degen::CoverArgs cover_args;
    std::string cover_kind = "II";
    std::vector<long> f_coords;
    CLI::App* cover = app.add_subcommand(
        "cover", "invariant and anti-invariant cohomology of a double-cover pullback");
    cover->add_option("--type", cover_kind, "model type (II or III)")
        ->required()
        ->check(CLI::IsMember({"II", "III"}));
    cover->add_option("--d1", cover_args.d1, "cover degree parameter (>= 1)")->required();
    cover->add_option("--f", f_coords, "class to pull back, as m a b (default: B)")
        ->expected(3);
    cover->add_flag("--audit", cover_args.audit, "include convention notes");
    add_format(cover, format);

    degen::TypeivArgs typeiv_args;
    CLI::App* typeiv = app.add_subcommand(
        "typeiv", "divisor ledger identities and branch parity for the fourth model");
    typeiv->add_option("--d", typeiv_args.d, "branch degree (>= 4)")->required();
    typeiv->add_flag("--audit", typeiv_args.audit, "include convention notes");
    add_format(typeiv, format);

    degen::InvariantsArgs inv_args;
    CLI::App* invariants = app.add_subcommand(
        "invariants", "numerical invariants of the degree-d1 cover");
    invariants->add_option("--d1", inv_args.d1, "cover degree parameter (>= 5)")->required();
    invariants->add_flag("--audit", inv_args.audit, "include convention notes");
    add_format(invariants, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return emit(degen::run_classify(classify_args), format);
        if (table->parsed()) {
            table_args.kind = degen::kind_from(table_kind);
            return emit(degen::run_table(table_args), format);
        }
        if (coh->parsed()) {
            coh_args.threefold = (level == "threefold");
            return emit(degen::run_coh(coh_args), format);
        }
        if (cover->parsed()) {
            cover_args.kind = degen::kind_from(cover_kind);
            if (!f_coords.empty())
                cover_args.f = std::array<long, 3>{f_coords[0], f_coords[1], f_coords[2]};
            return emit(degen::run_cover(cover_args), format);
        }
        if (typeiv->parsed()) return emit(degen::run_typeiv(typeiv_args), format);
        if (invariants->parsed()) return emit(degen::run_invariants(inv_args), format);
    } catch (const degen::SolveError& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
