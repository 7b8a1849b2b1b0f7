#include <symq/symq.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { symq_string_free(s); }
};

struct QuandleHandle {
    symq_quandle* q = nullptr;
    ~QuandleHandle() { symq_quandle_free(q); }
};

struct LinkHandle {
    symq_link* l = nullptr;
    ~LinkHandle() { symq_link_free(l); }
};

int report_error(int status) {
    std::cerr << "error: " << symq_last_error() << "\n";
    return status;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int load_quandle(const std::string& path, QuandleHandle& handle) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    int status = symq_quandle_parse(text.c_str(), &handle.q);
    return status == SYMQ_OK ? 0 : report_error(status);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return 0;
}

ordered_json table_json(const symq_quandle* q) {
    StringOut text;
    symq_quandle_format(q, &text.s);
    ordered_json rows = ordered_json::array();
    std::istringstream lines(text.s);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<int> row;
        int v;
        while (fields >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(row);
    }
    ordered_json out;
    out["order"] = symq_quandle_order(q);
    out["table"] = rows;
    return out;
}

int print_table(const symq_quandle* q, bool json, const std::string& out_path) {
    if (json) return emit(table_json(q).dump(), out_path);
    StringOut text;
    int status = symq_quandle_format(q, &text.s);
    if (status != SYMQ_OK) return report_error(status);
    return emit(text.s, out_path);
}

std::string join(const ordered_json& ints) {
    std::string line;
    for (const auto& v : ints) {
        if (!line.empty()) line += ' ';
        line += std::to_string(v.get<long long>());
    }
    return line;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

struct TargetOptions {
    std::string file;
    std::string ring;
    int dim = 0;
    std::string gram;

    bool from_file() const { return !file.empty(); }

    std::string describe() const {
        if (from_file()) return file;
        return ring + " dim " + std::to_string(dim) + " gram " + gram;
    }

    int load(QuandleHandle& handle) const {
        if (from_file()) {
            int status = load_quandle(file, handle);
            if (status) return status;
            int violations = 0;
            StringOut report;
            symq_quandle_validate(handle.q, &violations, &report.s);
            if (violations) {
                std::cerr << "error: " << file << " is not a quandle\n" << report.s;
                return 1;
            }
            return 0;
        }
        int status = symq_quandle_build(ring.c_str(), dim, gram.c_str(), 0, &handle.q);
        return status == SYMQ_OK ? 0 : report_error(status);
    }

    void add_options(CLI::App* cmd, bool file_allowed) {
        if (file_allowed) cmd->add_option("--target-file", file, "quandle matrix file");
        cmd->add_option("--ring", ring, "ring spec, e.g. Z4 or GF(2^2)/t^2+t+1");
        cmd->add_option("--dim", dim, "module dimension");
        cmd->add_option("--gram", gram, "Gram matrix rows, e.g. \"0,2;2,0\"");
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite symplectic quandles and link invariants"};
    app.require_subcommand(1);

    bool json = false;
    bool deterministic = true;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_flag("--seedless-deterministic", deterministic,
                 "byte-identical output for identical inputs (always on)");

    int exit_code = 0;

    // quandle ------------------------------------------------------------
    auto* quandle = app.add_subcommand("quandle", "operation-table computations");
    quandle->require_subcommand(1);

    auto* build = quandle->add_subcommand("build", "symplectic quandle of a form");
    auto build_target = std::make_shared<TargetOptions>();
    build_target->add_options(build, false);
    auto build_out = std::make_shared<std::string>();
    build->add_option("-o,--output", *build_out, "write the table to a file");
    build->callback([&, build_target, build_out] {
        QuandleHandle q;
        int status = symq_quandle_build(build_target->ring.c_str(), build_target->dim,
                                        build_target->gram.c_str(), 0, &q.q);
        exit_code = status == SYMQ_OK ? print_table(q.q, json, *build_out)
                                      : report_error(status);
    });

    auto add_file_cmd = [&](const std::string& name, const std::string& help, auto action) {
        auto* cmd = quandle->add_subcommand(name, help);
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "quandle matrix file")->required();
        cmd->callback([&, path, action] {
            QuandleHandle q;
            exit_code = load_quandle(*path, q);
            if (!exit_code) exit_code = action(q.q);
        });
        return cmd;
    };

    add_file_cmd("check", "validate the quandle axioms", [&](symq_quandle* q) {
        int violations = 0;
        StringOut report;
        int status = symq_quandle_validate(q, &violations, &report.s);
        if (status != SYMQ_OK) return report_error(status);
        if (json) {
            ordered_json out;
            out["valid"] = violations == 0;
            auto& list = out["violations"] = ordered_json::array();
            std::istringstream lines(report.s);
            std::string line;
            while (std::getline(lines, line)) list.push_back(line);
            std::cout << out.dump() << "\n";
        } else if (violations == 0) {
            std::cout << "valid\n";
        } else {
            std::cerr << report.s;
        }
        return violations == 0 ? 0 : 1;
    });

    add_file_cmd("qpoly", "quandle polynomial in (s, t)", [&](symq_quandle* q) {
        StringOut out;
        int status = symq_quandle_qpoly(q, json ? 1 : 0, &out.s);
        if (status != SYMQ_OK) return report_error(status);
        std::cout << out.s << "\n";
        return 0;
    });

    add_file_cmd("orbits", "orbit decomposition", [&](symq_quandle* q) {
        StringOut out;
        int status = symq_quandle_orbits(q, &out.s);
        if (status != SYMQ_OK) return report_error(status);
        if (json) {
            std::cout << out.s << "\n";
        } else {
            for (const auto& orbit : ordered_json::parse(std::string(out.s)))
                std::cout << join(orbit) << "\n";
        }
        return 0;
    });

    add_file_cmd("trivial-component", "maximal trivial component", [&](symq_quandle* q) {
        StringOut out;
        int status = symq_quandle_trivial_component(q, &out.s);
        if (status != SYMQ_OK) return report_error(status);
        if (json)
            std::cout << out.s << "\n";
        else
            std::cout << join(ordered_json::parse(std::string(out.s))) << "\n";
        return 0;
    });

    add_file_cmd("dual", "dual quandle table", [&](symq_quandle* q) {
        QuandleHandle d;
        int status = symq_quandle_dual(q, &d.q);
        if (status != SYMQ_OK) return report_error(status);
        return print_table(d.q, json, "");
    });

    auto* qunion = quandle->add_subcommand("union", "disjoint union of two tables");
    auto union_paths = std::make_shared<std::vector<std::string>>();
    qunion->add_option("files", *union_paths, "two quandle matrix files")
        ->expected(2)
        ->required();
    qunion->callback([&, union_paths] {
        QuandleHandle a, b, u;
        exit_code = load_quandle((*union_paths)[0], a);
        if (!exit_code) exit_code = load_quandle((*union_paths)[1], b);
        if (exit_code) return;
        int status = symq_quandle_union(a.q, b.q, &u.q);
        exit_code = status == SYMQ_OK ? print_table(u.q, json, "") : report_error(status);
    });

    auto* iso = quandle->add_subcommand("iso", "search for an isomorphism");
    auto iso_paths = std::make_shared<std::vector<std::string>>();
    iso->add_option("files", *iso_paths, "two quandle matrix files")->expected(2)->required();
    iso->callback([&, iso_paths] {
        QuandleHandle a, b;
        exit_code = load_quandle((*iso_paths)[0], a);
        if (!exit_code) exit_code = load_quandle((*iso_paths)[1], b);
        if (exit_code) return;
        StringOut out;
        int status = symq_quandle_isomorphism(a.q, b.q, &out.s);
        if (status != SYMQ_OK) {
            exit_code = report_error(status);
            return;
        }
        if (json) {
            std::cout << out.s << "\n";
        } else {
            auto result = ordered_json::parse(std::string(out.s));
            if (result["isomorphic"].get<bool>())
                std::cout << "isomorphic\n" << join(result["map"]) << "\n";
            else
                std::cout << "not isomorphic\n";
        }
    });

    // symplectic ----------------------------------------------------------
    auto* symplectic = app.add_subcommand("symplectic", "form-level computations");
    symplectic->require_subcommand(1);

    auto* rad = symplectic->add_subcommand("radical", "vectors pairing to zero with everything");
    auto rad_target = std::make_shared<TargetOptions>();
    rad_target->add_options(rad, false);
    rad->callback([&, rad_target] {
        StringOut out;
        int status = symq_symplectic_radical(rad_target->ring.c_str(), rad_target->dim,
                                             rad_target->gram.c_str(), &out.s);
        if (status != SYMQ_OK) {
            exit_code = report_error(status);
            return;
        }
        if (json) {
            std::cout << out.s << "\n";
        } else {
            auto result = ordered_json::parse(std::string(out.s));
            std::cout << "count " << result["count"].get<long long>() << "\n";
            std::cout << "indices " << join(result["indices"]) << "\n";
            for (const auto& v : result["vectors"]) std::cout << "vector " << join(v) << "\n";
        }
    });

    auto* reduce = symplectic->add_subcommand("reduce", "symplectic basis over a field");
    auto reduce_target = std::make_shared<TargetOptions>();
    reduce_target->add_options(reduce, false);
    reduce->callback([&, reduce_target] {
        StringOut out;
        int status = symq_symplectic_reduce(reduce_target->ring.c_str(), reduce_target->dim,
                                            reduce_target->gram.c_str(), &out.s);
        if (status != SYMQ_OK) {
            exit_code = report_error(status);
            return;
        }
        if (json) {
            std::cout << out.s << "\n";
        } else {
            auto result = ordered_json::parse(std::string(out.s));
            std::cout << "rank " << result["rank"].get<int>() << "\n";
            std::cout << "basis\n";
            for (const auto& row : result["basis"]) std::cout << join(row) << "\n";
            std::cout << "standard form\n";
            for (const auto& row : result["standard_form"]) std::cout << join(row) << "\n";
        }
    });

    auto* isometric = symplectic->add_subcommand("isometric", "compare two forms");
    auto iso_target = std::make_shared<TargetOptions>();
    iso_target->add_options(isometric, false);
    auto gram2 = std::make_shared<std::string>();
    isometric->add_option("--gram2", *gram2, "Gram matrix of the second form")->required();
    isometric->callback([&, iso_target, gram2] {
        StringOut out;
        int status = symq_symplectic_isometric(iso_target->ring.c_str(), iso_target->dim,
                                               iso_target->gram.c_str(), gram2->c_str(), &out.s);
        if (status != SYMQ_OK) {
            exit_code = report_error(status);
            return;
        }
        if (json) {
            std::cout << out.s << "\n";
        } else {
            auto result = ordered_json::parse(std::string(out.s));
            if (result["isometric"].get<bool>()) {
                std::cout << "isometric\n";
                for (const auto& row : result["witness"]) std::cout << join(row) << "\n";
            } else {
                std::cout << "not isometric\n";
            }
        }
    });

    // link ----------------------------------------------------------------
    auto* link = app.add_subcommand("link", "Gauss-code handling");
    link->require_subcommand(1);
    auto* lparse = link->add_subcommand("parse", "arcs and crossing relations");
    auto gauss = std::make_shared<std::string>();
    lparse->add_option("--gauss", *gauss, "signed Gauss code");
    lparse->callback([&, gauss] {
        LinkHandle l;
        int status = symq_link_parse(gauss->c_str(), &l.l);
        if (status != SYMQ_OK) {
            exit_code = report_error(status);
            return;
        }
        StringOut out;
        symq_link_info(l.l, &out.s);
        if (json) {
            std::cout << out.s << "\n";
        } else {
            auto info = ordered_json::parse(std::string(out.s));
            std::cout << "components " << info["components"].get<int>() << "\n";
            std::cout << "crossings " << info["crossings"].get<int>() << "\n";
            std::cout << "generators " << info["generators"].get<int>() << "\n";
            for (const auto& r : info["relations"]) {
                const char* op = r["sign"].get<int>() > 0 ? " |> " : " |>^-1 ";
                std::cout << "x" << r["a"].get<int>() << op << "x" << r["b"].get<int>()
                          << " = x" << r["c"].get<int>() << "\n";
            }
        }
    });

    // invariant -------------------------------------------------------------
    auto* invariant = app.add_subcommand("invariant", "link invariants from colorings");
    invariant->require_subcommand(1);

    auto add_invariant_cmd = [&](const std::string& name, const std::string& help, auto action) {
        auto* cmd = invariant->add_subcommand(name, help);
        auto target = std::make_shared<TargetOptions>();
        auto code = std::make_shared<std::string>();
        cmd->add_option("--gauss", *code, "signed Gauss code");
        target->add_options(cmd, true);
        cmd->callback([&, target, code, action] {
            LinkHandle l;
            int status = symq_link_parse(code->c_str(), &l.l);
            if (status != SYMQ_OK) {
                exit_code = report_error(status);
                return;
            }
            QuandleHandle t;
            exit_code = target->load(t);
            if (exit_code) return;
            if (json) {
                StringOut out;
                status = symq_invariant_all(l.l, t.q, &out.s);
                if (status != SYMQ_OK) {
                    exit_code = report_error(status);
                    return;
                }
                auto inner = ordered_json::parse(std::string(out.s));
                ordered_json result;
                result["link"] = *code;
                result["target"] = target->describe();
                result["count"] = inner["count"];
                result["phi_e"] = inner["phi_e"];
                result["phi_sqp"] = inner["phi_sqp"];
                std::cout << result.dump() << "\n";
            } else {
                exit_code = action(l.l, t.q);
            }
        });
    };

    add_invariant_cmd("count", "number of colorings", [&](symq_link* l, symq_quandle* t) {
        long long count = 0;
        int status = symq_invariant_count(l, t, &count);
        if (status != SYMQ_OK) return report_error(status);
        std::cout << count << "\n";
        return 0;
    });

    add_invariant_cmd("phi-e", "enhanced invariant in q", [&](symq_link* l, symq_quandle* t) {
        StringOut out;
        int status = symq_invariant_phi_e(l, t, 0, &out.s);
        if (status != SYMQ_OK) return report_error(status);
        std::cout << out.s << "\n";
        return 0;
    });

    add_invariant_cmd("phi-sqp", "module-enhanced invariant in (q, z)",
                      [&](symq_link* l, symq_quandle* t) {
                          StringOut out;
                          int status = symq_invariant_phi_sqp(l, t, 0, &out.s);
                          if (status != SYMQ_OK) return report_error(status);
                          std::cout << out.s << "\n";
                          return 0;
                      });

    // scan ------------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "systematic searches");
    scan->require_subcommand(1);
    auto* conjecture = scan->add_subcommand(
        "conjecture", "isomorphism classes vs isometry classes of d=2 forms over Z_n");
    auto moduli = std::make_shared<std::string>();
    auto scan_dim = std::make_shared<int>(2);
    conjecture->add_option("--moduli", *moduli, "modulus range a..b")->required();
    conjecture->add_option("--dim", *scan_dim, "module dimension (2)");
    conjecture->callback([&, moduli, scan_dim] {
        int lo = 0, hi = 0;
        if (!parse_range(*moduli, lo, hi)) {
            std::cerr << "error: --moduli expects a range like 2..9\n";
            exit_code = 1;
            return;
        }
        StringOut out;
        int status = symq_scan_conjecture(lo, hi, *scan_dim, &out.s);
        if (status != SYMQ_OK) {
            exit_code = report_error(status);
            return;
        }
        if (json) {
            std::cout << out.s << "\n";
        } else {
            auto report = ordered_json::parse(std::string(out.s));
            for (const auto& entry : report["moduli"]) {
                std::cout << "Z" << entry["modulus"].get<int>() << " iso-classes";
                for (const auto& cls : entry["isomorphism_classes"])
                    std::cout << " [" << join(cls) << "]";
                std::cout << " isometry-classes";
                for (const auto& cls : entry["isometry_classes"])
                    std::cout << " [" << join(cls) << "]";
                std::cout << (entry["agree"].get<bool>() ? " agree" : " DISAGREE") << "\n";
                if (!entry["counterexample"].is_null())
                    std::cout << "  counterexample pair " << join(entry["counterexample"])
                              << "\n";
            }
            std::cout << (report["all_agree"].get<bool>() ? "all moduli agree"
                                                          : "disagreement found")
                      << "\n";
        }
    });

    // let the global --json flag appear after the subcommand as well
    std::vector<CLI::App*> pending{&app};
    while (!pending.empty()) {
        CLI::App* cur = pending.back();
        pending.pop_back();
        for (CLI::App* sub : cur->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            pending.push_back(sub);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return exit_code;
}
