#include "mptplan/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mptplan {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next significant line split into whitespace-separated tokens.
    std::vector<std::string> next(const char *expected) {
        while (pos_ <= text_.size()) {
            if (pos_ == text_.size())
                break;
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            auto tokens = split(line);
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            return tokens;
        }
        throw SyntaxError(line_no_, std::string("unexpected end of input, expected ") +
                                        expected);
    }

    bool at_end() {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                end = text_.size();
            auto tokens = split(text_.substr(pos_, end - pos_));
            if (!tokens.empty() && tokens.front().front() != '#')
                return false;
            pos_ = end + 1;
            ++line_no_;
        }
        return true;
    }

    int line() const { return line_no_; }

private:
    static std::vector<std::string> split(std::string_view line) {
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            if (i > start)
                tokens.emplace_back(line.substr(start, i - start));
        }
        return tokens;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : in_(text) {}

    Task parse() {
        auto magic = in_.next("magic line");
        if (magic.size() != 1 || magic[0] != kMptMagic)
            fail("missing %mpt1 header");

        Task task;
        int num_vars = header("vars");
        for (int i = 0; i < num_vars; ++i)
            task.variables.push_back(variable(i));

        expect_keyword(in_.next("init"), "init", 1);
        std::vector<int> init(num_vars, kUndefinedValue);
        for (int i = 0; i < num_vars; ++i) {
            if (task.variables[i].is_derived())
                continue;
            auto tokens = in_.next("initial value");
            if (tokens.size() != 1)
                fail("expected a single initial value");
            init[i] = integer(tokens[0]);
        }
        task.init = State{std::move(init)};

        int num_goals = header("goal");
        std::vector<Fact> goal;
        for (int i = 0; i < num_goals; ++i) {
            auto tokens = in_.next("goal pair");
            expect_keyword(tokens, "g", 3);
            goal.push_back({integer(tokens[1]), integer(tokens[2])});
        }
        task.goal = PartialAssignment(std::move(goal));

        int num_axioms = header("axioms");
        for (int i = 0; i < num_axioms; ++i)
            task.axioms.push_back(axiom());

        int num_ops = header("ops");
        for (int i = 0; i < num_ops; ++i)
            task.operators.push_back(op());

        expect_keyword(in_.next("end"), "end", 1);
        if (!in_.at_end())
            fail("trailing content after end");

        task.validate();
        return task;
    }

private:
    [[noreturn]] void fail(const std::string &message) {
        throw SyntaxError(in_.line(), message);
    }

    int integer(const std::string &token) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            fail("expected an integer, got '" + token + "'");
        return value;
    }

    int count(const std::string &token) {
        int n = integer(token);
        if (n < 0)
            fail("negative count");
        return n;
    }

    void expect_keyword(const std::vector<std::string> &tokens, const char *keyword,
                        std::size_t size) {
        if (tokens.empty() || tokens[0] != keyword)
            fail(std::string("expected '") + keyword + "'");
        if (tokens.size() != size)
            fail(std::string("malformed '") + keyword + "' line");
    }

    int header(const char *keyword) {
        auto tokens = in_.next(keyword);
        expect_keyword(tokens, keyword, 2);
        return count(tokens[1]);
    }

    Variable variable(int expected_id) {
        auto tokens = in_.next("var");
        if (tokens.empty() || tokens[0] != "var")
            fail("expected 'var'");
        std::size_t hash = tokens.size();
        for (std::size_t i = 0; i < tokens.size(); ++i)
            if (tokens[i] == "#") {
                hash = i;
                break;
            }
        if (hash != 6)
            fail("malformed 'var' line");
        if (integer(tokens[1]) != expected_id)
            throw SemanticError("variable ids must be dense; expected " +
                                std::to_string(expected_id));
        Variable v;
        v.name = tokens[2];
        v.domain_size = integer(tokens[3]);
        if (tokens[4] == "F")
            v.kind = VariableKind::Fluent;
        else if (tokens[4] == "D")
            v.kind = VariableKind::Derived;
        else
            fail("variable kind must be F or D");
        v.axiom_layer = integer(tokens[5]);
        for (std::size_t i = hash + 1; i < tokens.size(); ++i)
            v.value_names.push_back(tokens[i]);
        return v;
    }

    // Reads n (var, val) pairs starting at tokens[pos].
    std::vector<Fact> pairs(const std::vector<std::string> &tokens, std::size_t pos,
                            int n) {
        if (tokens.size() < pos + 2 * static_cast<std::size_t>(n))
            fail("too few variable/value pairs");
        std::vector<Fact> facts;
        for (int i = 0; i < n; ++i)
            facts.push_back({integer(tokens[pos + 2 * i]), integer(tokens[pos + 2 * i + 1])});
        return facts;
    }

    Axiom axiom() {
        auto tokens = in_.next("axiom");
        if (tokens.empty() || tokens[0] != "axiom" || tokens.size() < 2)
            fail("expected 'axiom'");
        int body_size = count(tokens[1]);
        std::size_t arrow = 2 + 2 * static_cast<std::size_t>(body_size);
        if (tokens.size() != arrow + 3 || tokens[arrow] != "->")
            fail("malformed axiom line");
        Axiom a;
        a.body = PartialAssignment(pairs(tokens, 2, body_size));
        a.head_var = integer(tokens[arrow + 1]);
        a.head_value = integer(tokens[arrow + 2]);
        return a;
    }

    Operator op() {
        auto name = in_.next("op");
        expect_keyword(name, "op", 2);
        Operator o;
        o.name = name[1];

        auto pre = in_.next("pre");
        if (pre.size() < 2 || pre[0] != "pre")
            fail("expected 'pre'");
        int pre_size = count(pre[1]);
        if (pre.size() != 2 + 2 * static_cast<std::size_t>(pre_size))
            fail("malformed 'pre' line");
        o.precondition = PartialAssignment(pairs(pre, 2, pre_size));

        int num_effects = header("eff");
        for (int i = 0; i < num_effects; ++i) {
            auto tokens = in_.next("effect");
            if (tokens.size() < 2 || tokens[0] != "e")
                fail("expected 'e'");
            int cond_size = count(tokens[1]);
            std::size_t tail = 2 + 2 * static_cast<std::size_t>(cond_size);
            if (tokens.size() != tail + 2)
                fail("malformed effect line");
            Effect e;
            e.condition = PartialAssignment(pairs(tokens, 2, cond_size));
            e.var = integer(tokens[tail]);
            e.value = integer(tokens[tail + 1]);
            o.effects.push_back(std::move(e));
        }
        return o;
    }

    LineReader in_;
};

void write_pairs(std::ostream &out, const PartialAssignment &pa) {
    for (const Fact &f : pa)
        out << ' ' << f.var << ' ' << f.value;
}

}  // namespace

Task parse_mpt(std::string_view text) {
    return Parser(text).parse();
}

Task read_mpt_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MptError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_mpt(buffer.str());
}

std::string serialize_mpt(const Task &task) {
    std::ostringstream out;
    out << kMptMagic << '\n';
    out << "vars " << task.variables.size() << '\n';
    for (std::size_t i = 0; i < task.variables.size(); ++i) {
        const Variable &v = task.variables[i];
        out << "var " << i << ' ' << v.name << ' ' << v.domain_size << ' '
            << (v.is_derived() ? 'D' : 'F') << ' ' << v.axiom_layer;
        if (!v.value_names.empty()) {
            out << " #";
            for (const std::string &n : v.value_names)
                out << ' ' << n;
        }
        out << '\n';
    }
    out << "init\n";
    for (std::size_t i = 0; i < task.variables.size(); ++i)
        if (!task.variables[i].is_derived())
            out << task.init[i] << '\n';
    out << "goal " << task.goal.size() << '\n';
    for (const Fact &f : task.goal)
        out << "g " << f.var << ' ' << f.value << '\n';
    out << "axioms " << task.axioms.size() << '\n';
    for (const Axiom &a : task.axioms) {
        out << "axiom " << a.body.size();
        write_pairs(out, a.body);
        out << " -> " << a.head_var << ' ' << a.head_value << '\n';
    }
    out << "ops " << task.operators.size() << '\n';
    for (const Operator &o : task.operators) {
        out << "op " << o.name << '\n';
        out << "pre " << o.precondition.size();
        write_pairs(out, o.precondition);
        out << '\n';
        out << "eff " << o.effects.size() << '\n';
        for (const Effect &e : o.effects) {
            out << "e " << e.condition.size();
            write_pairs(out, e.condition);
            out << ' ' << e.var << ' ' << e.value << '\n';
        }
    }
    out << "end\n";
    return out.str();
}

void write_mpt_file(const std::filesystem::path &path, const Task &task) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw MptError("cannot write " + path.string());
    out << serialize_mpt(task);
}

}  // namespace mptplan
