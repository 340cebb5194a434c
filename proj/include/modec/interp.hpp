#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "modec/decider.hpp"
#include "modec/parser.hpp"

namespace modec {

struct SessionOptions {
    bool trace = false;
    bool json = false;
};

/// Outcome of one executed statement, ready for rendering.
struct StatementResult {
    enum class Kind { None, Bool, Text, TextList } kind = Kind::None;
    bool b = false;
    std::string text;                // element / content payload
    std::vector<std::string> list;   // xgcd payload
    std::vector<TraceStep> trace;    // set when the query ran the decider
    bool has_trace = false;
    std::string let_echo;            // bound value for let statements
};

/// Evaluates one parsed statement against the environment, updating bindings
/// for let statements.
StatementResult eval_statement(const DomainRing& ring, const ParsedStatement& st,
                               Bindings& env, bool want_trace);

/// Renders one statement outcome. Text mode: one line per result, nothing
/// for let or blank statements, trace lines indented underneath. JSON mode:
/// one object per non-blank statement on a single line, fields query /
/// result / trace.
std::string format_output(const std::string& query, const StatementResult& r,
                          const SessionOptions& opts);

/// Re-applies the rewrite named by a recorded step to its recorded inputs
/// and checks that the recorded outputs reproduce.
bool replay_step(const DomainRing& ring, const TraceStep& step);

/// Stateful line-by-line runner shared by the REPL and the script runner.
class Session {
  public:
    Session(DomainRing ring, SessionOptions opts);

    /// Executes one line and returns its rendered output ("" when the line
    /// produces none). Throws the library error on failure.
    std::string run_line(const std::string& line, int line_no);

    const DomainRing& ring() const { return ring_; }

  private:
    DomainRing ring_;
    SessionOptions opts_;
    Bindings env_;
};

/// Executes a stream statement-by-statement, writing outputs to out and
/// errors to err. Stops at the first error: exit code 2 for syntax errors,
/// 1 for evaluation errors, 0 otherwise.
int run_script(Session& session, std::istream& in, std::ostream& out, std::ostream& err);

/// Interactive loop: prints errors and keeps going; returns 0 at end of
/// input.
int run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace modec
