#pragma once

// Command dispatch for the `difftrans` executable:
//   difftrans certify -a <expr> -h <rat>
//   difftrans solve   -a <expr> -b <exp-poly-spec> -h <rat>
//   difftrans iterate -A <matrix-file> -l <int>
//   difftrans gauge   -A <matrix-file> -T <matrix-file>
//   difftrans verify  <document.json | inline-json>
// Exit codes: 0 success (certificate / DA / verification passed), 10 witness
// or DT verdict, 1 failed re-verification, 2 usage, parse, or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "difftrans/json_io.hpp"

namespace difftrans {

namespace detail {

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    Json j;
    in >> j;
    return j;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certifier for differential algebraicity of first-order shift difference equations"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    std::string a_text, b_text = "0", h_text, file_a, file_t, doc_text;
    long ell = 1;

    CLI::App* certify = app.add_subcommand("certify", "decide a = c rho(g)/g and print the certificate or witness");
    certify->set_help_flag("--help", "print usage");
    certify->add_option("-a", a_text, "coefficient a of rho(y) = a y")->required();
    certify->add_option("-h", h_text, "shift step h (nonzero rational)")->required();

    CLI::App* solve = app.add_subcommand("solve", "decide rho(y) = a y + b and print the verdict");
    solve->set_help_flag("--help", "print usage");
    solve->add_option("-a", a_text, "coefficient a")->required();
    solve->add_option("-b", b_text, "right-hand side: expression or JSON multiplier map");
    solve->add_option("-h", h_text, "shift step h (nonzero rational)")->required();

    CLI::App* iterate = app.add_subcommand("iterate", "print the iterated system A_[l]");
    iterate->set_help_flag("--help", "print usage");
    iterate->add_option("-A", file_a, "system file (JSON)")->required();
    iterate->add_option("-l", ell, "iteration order (>= 1)")->required();

    CLI::App* gauge = app.add_subcommand("gauge", "print the gauge transform rho(T) A T^-1");
    gauge->set_help_flag("--help", "print usage");
    gauge->add_option("-A", file_a, "system file (JSON)")->required();
    gauge->add_option("-T", file_t, "gauge matrix file (JSON)")->required();

    CLI::App* verify = app.add_subcommand("verify", "re-verify an emitted JSON document");
    verify->set_help_flag("--help", "print usage");
    verify->add_option("document", doc_text, "path to a JSON document, or inline JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (certify->parsed()) {
            RatFunc a = parse_ratfunc(a_text);
            StepH s(parse_rat(h_text));
            CertifyResult r = coboundary_certify(a, s);
            if (std::holds_alternative<Certificate>(r)) {
                detail::emit(out, certificate_json(a, s, std::get<Certificate>(r)));
                return 0;
            }
            detail::emit(out, witness_json(a, s, std::get<ObstructionWitness>(r)));
            return 10;
        }
        if (solve->parsed()) {
            RatFunc a = parse_ratfunc(a_text);
            StepH s(parse_rat(h_text));
            ExpPoly b = exppoly_from_spec(b_text);
            Verdict v = solve_order1(a, b, s);
            detail::emit(out, verdict_json(a, b, s, v));
            return v.is_da() ? 0 : 10;
        }
        if (iterate->parsed()) {
            DiffSystem sys = system_from_json(detail::load_json_file(file_a));
            detail::emit(out, system_json(iterate_system(sys, ell)));
            return 0;
        }
        if (gauge->parsed()) {
            DiffSystem sys = system_from_json(detail::load_json_file(file_a));
            Matrix t = matrix_from_json(detail::load_json_file(file_t));
            detail::emit(out, system_json(gauge_transform(sys, t)));
            return 0;
        }
        if (verify->parsed()) {
            Json doc;
            std::ifstream in(doc_text);
            if (in) {
                in >> doc;
            } else {
                doc = Json::parse(doc_text);
            }
            bool ok = verify_document(doc);
            out << (ok ? "verified\n" : "verification failed\n");
            return ok ? 0 : 1;
        }
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace difftrans
