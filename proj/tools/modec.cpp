#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "modec/interp.hpp"

int main(int argc, char** argv) {
    CLI::App app{"modec: decision procedures for module theories over two Bezout domains"};
    std::string domain;
    app.add_option("--domain", domain, "coefficient domain")
        ->required()
        ->check(CLI::IsMember({"kjo", "qx"}));
    bool trace = false;
    app.add_flag("--trace", trace, "attach reduction traces to decider queries");
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    std::string script;
    app.add_option("script", script, "statement script; omit for a line-based REPL");
    CLI11_PARSE(app, argc, argv);

    modec::DomainRing ring = domain == "kjo" ? modec::DomainRing::kjo()
                                             : modec::DomainRing::rational_poly();
    modec::SessionOptions opts;
    opts.trace = trace;
    opts.json = format == "json";
    modec::Session session(ring, opts);

    if (script.empty()) {
        return modec::run_repl(session, std::cin, std::cout, std::cerr);
    }
    std::ifstream in(script);
    if (!in) {
        std::cerr << "error: cannot open script '" << script << "'\n";
        return 1;
    }
    return modec::run_script(session, in, std::cout, std::cerr);
}
