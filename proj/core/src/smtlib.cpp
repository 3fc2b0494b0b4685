/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/smtlib.hpp"

#include "ttc/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <variant>

namespace ttc {

namespace {

enum class TokKind { Symbol, Quoted, Keyword, String, Number };

struct SExpr {
	bool is_list = false;
	TokKind kind = TokKind::Symbol;
	std::string token;
	std::vector<SExpr> items;
	std::size_t line = 1, column = 1;

	bool is_symbol(std::string_view s) const
	{
		return !is_list && kind == TokKind::Symbol && token == s;
	}
};

[[noreturn]] void fail(const SExpr &e, const std::string &what)
{
	throw ParseError(what, e.line, e.column);
}

[[noreturn]] void unsupported(const SExpr &e, const std::string &what)
{
	throw UnsupportedError(what + " (line " + std::to_string(e.line) + ", column " +
	                       std::to_string(e.column) + ")");
}

bool is_numeral_text(std::string_view t)
{
	std::size_t i = 0;
	if (t.size() > 1 && t[0] == '-')
		i = 1;
	std::size_t digits = 0, dots = 0;
	for (; i < t.size(); ++i) {
		if (std::isdigit(static_cast<unsigned char>(t[i])))
			++digits;
		else if (t[i] == '.' && digits > 0 && dots == 0)
			++dots;
		else
			return false;
	}
	return digits > 0 && t.back() != '.';
}

class Reader {
public:
	explicit Reader(std::string_view text) : text_(text) {}

	/* Top-level expressions of the whole input. */
	std::vector<SExpr> read_all()
	{
		std::vector<SExpr> out;
		for (skip(); pos_ < text_.size(); skip())
			out.push_back(read());
		return out;
	}

private:
	std::string_view text_;
	std::size_t pos_ = 0, line_ = 1, col_ = 1;

	char peek() const { return text_[pos_]; }

	void advance()
	{
		if (text_[pos_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++pos_;
	}

	void skip()
	{
		while (pos_ < text_.size()) {
			char c = peek();
			if (c == ';') {
				while (pos_ < text_.size() && peek() != '\n')
					advance();
			} else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			} else {
				break;
			}
		}
	}

	SExpr read()
	{
		SExpr e;
		e.line = line_;
		e.column = col_;
		char c = peek();
		if (c == '(') {
			advance();
			e.is_list = true;
			for (skip(); ; skip()) {
				if (pos_ >= text_.size())
					throw ParseError("unterminated list opened", e.line, e.column);
				if (peek() == ')') {
					advance();
					break;
				}
				e.items.push_back(read());
			}
			return e;
		}
		if (c == ')')
			throw ParseError("unexpected ')'", line_, col_);
		if (c == '|') {
			advance();
			e.kind = TokKind::Quoted;
			while (pos_ < text_.size() && peek() != '|') {
				e.token.push_back(peek());
				advance();
			}
			if (pos_ >= text_.size())
				throw ParseError("unterminated quoted symbol", e.line, e.column);
			advance();
			return e;
		}
		if (c == '"') {
			advance();
			e.kind = TokKind::String;
			for (;;) {
				if (pos_ >= text_.size())
					throw ParseError("unterminated string literal", e.line, e.column);
				if (peek() == '"') {
					advance();
					if (pos_ < text_.size() && peek() == '"') {
						e.token.push_back('"');
						advance();
						continue;
					}
					break;
				}
				e.token.push_back(peek());
				advance();
			}
			return e;
		}
		while (pos_ < text_.size()) {
			char d = peek();
			if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' ||
			    d == ';' || d == '|' || d == '"')
				break;
			e.token.push_back(d);
			advance();
		}
		if (e.token.front() == ':')
			e.kind = TokKind::Keyword;
		else if (is_numeral_text(e.token))
			e.kind = TokKind::Number;
		else if (std::isdigit(static_cast<unsigned char>(e.token.front())))
			throw ParseError("malformed numeral '" + e.token + "'", e.line, e.column);
		return e;
	}
};

using Value = std::variant<FormulaAst, LinearTerm>;

Coefficient add(const Coefficient *a, const Coefficient *b)
{
	if (!a)
		return *b;
	if (!b)
		return *a;
	return Coefficient::of(a->value + b->value);
}

Coefficient mul(const Coefficient &c, const Coefficient &k)
{
	if (c.value == 1.0)
		return k;
	if (c.value == -1.0)
		return k.negated();
	if (k.value == 1.0)
		return c;
	return Coefficient::of(c.value * k.value);
}

LinearTerm sum(const LinearTerm &a, const LinearTerm &b)
{
	LinearTerm r = a;
	for (const auto &[j, c] : b.coeffs) {
		auto it = r.coeffs.find(j);
		if (it == r.coeffs.end()) {
			r.coeffs.emplace(j, c);
		} else {
			it->second = add(&it->second, &c);
			if (it->second.value == 0.0)
				r.coeffs.erase(it);
		}
	}
	r.constant = a.constant + b.constant;
	r.constant_text.reset();
	if (b.constant == 0.0)
		r.constant_text = a.constant_text;
	else if (a.constant == 0.0)
		r.constant_text = b.constant_text;
	return r;
}

LinearTerm scale(const LinearTerm &t, const Coefficient &k)
{
	LinearTerm r;
	if (k.value != 0.0)
		for (const auto &[j, c] : t.coeffs)
			r.coeffs.emplace(j, mul(c, k));
	Coefficient c0{t.constant, t.constant_text.value_or(format_decimal(t.constant))};
	Coefficient folded = mul(c0, k);
	r.constant = folded.value;
	if (r.constant != 0.0)
		r.constant_text = folded.text;
	return r;
}

LinearTerm negate(const LinearTerm &t)
{
	return scale(t, Coefficient{-1.0, "-1"});
}

Coefficient constant_of(const LinearTerm &t)
{
	return {t.constant, t.constant_text.value_or(format_decimal(t.constant))};
}

class Translator {
public:
	Formula run(const std::vector<SExpr> &script)
	{
		std::vector<FormulaAst> asserted;
		for (const auto &cmd : script) {
			if (!cmd.is_list || cmd.items.empty() || cmd.items[0].is_list)
				fail(cmd, "expected a command");
			const std::string &head = cmd.items[0].token;
			if (head == "set-logic") {
				if (cmd.items.size() != 2)
					fail(cmd, "set-logic takes one argument");
				if (cmd.items[1].token != "QF_LRA")
					unsupported(cmd.items[1], "logic '" + cmd.items[1].token +
					            "' is not supported (only QF_LRA)");
			} else if (head == "set-info") {
				if (cmd.items.size() < 2 || cmd.items[1].kind != TokKind::Keyword)
					fail(cmd, "set-info expects a keyword");
			} else if (head == "declare-fun") {
				if (cmd.items.size() != 4 || !cmd.items[2].is_list)
					fail(cmd, "malformed declare-fun");
				if (!cmd.items[2].items.empty())
					unsupported(cmd, "uninterpreted functions are not supported");
				declare(cmd.items[1], cmd.items[3]);
			} else if (head == "declare-const") {
				if (cmd.items.size() != 3)
					fail(cmd, "malformed declare-const");
				declare(cmd.items[1], cmd.items[2]);
			} else if (head == "assert") {
				if (cmd.items.size() != 2)
					fail(cmd, "assert takes one term");
				asserted.push_back(boolean(cmd.items[1]));
			} else if (head == "check-sat" || head == "exit") {
				if (cmd.items.size() != 1)
					fail(cmd, head + " takes no arguments");
			} else {
				unsupported(cmd, "command '" + head + "' is not supported");
			}
		}
		Formula f;
		if (asserted.empty())
			f.root = FormulaAst::constant(true);
		else if (asserted.size() == 1)
			f.root = std::move(asserted.front());
		else
			f.root = FormulaAst::node(NodeKind::And, std::move(asserted));
		f.vars = std::move(decls_);
		return f;
	}

private:
	Declarations decls_;
	std::unordered_map<std::string, VarIndex> reals_;
	std::unordered_map<std::string, std::size_t> bools_;
	std::vector<std::unordered_map<std::string, Value>> lets_;

	void declare(const SExpr &sym, const SExpr &sort)
	{
		if (sym.is_list || (sym.kind != TokKind::Symbol && sym.kind != TokKind::Quoted))
			fail(sym, "expected a symbol");
		const std::string &name = sym.token;
		if (reals_.count(name) || bools_.count(name))
			fail(sym, "symbol '" + name + "' declared twice");
		if (sort.is_symbol("Real")) {
			reals_.emplace(name, decls_.reals.size());
			decls_.reals.push_back(name);
		} else if (sort.is_symbol("Bool")) {
			bools_.emplace(name, decls_.bools.size());
			decls_.bools.push_back(name);
		} else {
			unsupported(sort, "sort is not supported (only Real and Bool)");
		}
	}

	FormulaAst boolean(const SExpr &e)
	{
		Value v = term(e);
		if (auto *f = std::get_if<FormulaAst>(&v))
			return std::move(*f);
		fail(e, "expected a Boolean term");
	}

	LinearTerm arith(const SExpr &e)
	{
		Value v = term(e);
		if (auto *t = std::get_if<LinearTerm>(&v))
			return std::move(*t);
		fail(e, "expected a Real term");
	}

	const Value *lookup_let(const std::string &name) const
	{
		for (auto it = lets_.rbegin(); it != lets_.rend(); ++it) {
			auto f = it->find(name);
			if (f != it->end())
				return &f->second;
		}
		return nullptr;
	}

	Value atom_symbol(const SExpr &e)
	{
		if (e.kind == TokKind::Number) {
			LinearTerm t;
			const std::string &s = e.token;
			double v = 0.0;
			auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
			if (ec != std::errc{} || p != s.data() + s.size())
				fail(e, "malformed numeral '" + s + "'");
			t.constant = v;
			if (v != 0.0)
				t.constant_text = s;
			return t;
		}
		if (e.kind == TokKind::Keyword || e.kind == TokKind::String)
			unsupported(e, "unexpected literal '" + e.token + "'");
		if (e.kind == TokKind::Symbol) {
			if (e.token == "true")
				return FormulaAst::constant(true);
			if (e.token == "false")
				return FormulaAst::constant(false);
		}
		if (const Value *v = lookup_let(e.token))
			return *v;
		if (auto it = reals_.find(e.token); it != reals_.end()) {
			LinearTerm t;
			t.coeffs.emplace(it->second, Coefficient{1.0, "1"});
			return t;
		}
		if (auto it = bools_.find(e.token); it != bools_.end())
			return FormulaAst::variable(it->second);
		unsupported(e, "undeclared symbol '" + e.token + "'");
	}

	Value term(const SExpr &e)
	{
		if (!e.is_list)
			return atom_symbol(e);
		if (e.items.empty())
			fail(e, "empty application");
		const SExpr &h = e.items[0];
		if (h.is_list || h.kind != TokKind::Symbol)
			unsupported(e, "unsupported application head");
		const std::string &op = h.token;
		std::span<const SExpr> args(e.items.data() + 1, e.items.size() - 1);

		if (op == "let")
			return let(e);
		if (op == "forall" || op == "exists")
			unsupported(e, "quantifiers are not supported");

		if (op == "and" || op == "or") {
			if (args.empty())
				fail(e, "'" + op + "' needs at least one argument");
			std::vector<FormulaAst> ch;
			for (const auto &a : args)
				ch.push_back(boolean(a));
			if (ch.size() == 1)
				return std::move(ch.front());
			return FormulaAst::node(op == "and" ? NodeKind::And : NodeKind::Or, std::move(ch));
		}
		if (op == "not") {
			if (args.size() != 1)
				fail(e, "'not' takes one argument");
			return FormulaAst::node(NodeKind::Not, {boolean(args[0])});
		}
		if (op == "=>") {
			if (args.size() < 2)
				fail(e, "'=>' needs at least two arguments");
			FormulaAst acc = boolean(args.back());
			for (std::size_t i = args.size() - 1; i-- > 0;)
				acc = FormulaAst::node(NodeKind::Implies, {boolean(args[i]), std::move(acc)});
			return acc;
		}
		if (op == "xor") {
			if (args.size() < 2)
				fail(e, "'xor' needs at least two arguments");
			FormulaAst acc = boolean(args[0]);
			for (std::size_t i = 1; i < args.size(); ++i)
				acc = FormulaAst::node(NodeKind::Xor, {std::move(acc), boolean(args[i])});
			return acc;
		}
		if (op == "ite") {
			if (args.size() != 3)
				fail(e, "'ite' takes three arguments");
			FormulaAst c = boolean(args[0]);
			Value t = term(args[1]);
			if (!std::holds_alternative<FormulaAst>(t))
				unsupported(e, "arithmetic if-then-else is not supported");
			return FormulaAst::node(NodeKind::Ite,
			                        {std::move(c), std::get<FormulaAst>(std::move(t)), boolean(args[2])});
		}
		if (op == "=" || op == "<" || op == "<=" || op == ">" || op == ">=")
			return relation(e, op, args);

		if (op == "+") {
			if (args.empty())
				fail(e, "'+' needs arguments");
			LinearTerm acc = arith(args[0]);
			for (std::size_t i = 1; i < args.size(); ++i)
				acc = sum(acc, arith(args[i]));
			return acc;
		}
		if (op == "-") {
			if (args.empty())
				fail(e, "'-' needs arguments");
			LinearTerm acc = arith(args[0]);
			if (args.size() == 1)
				return negate(acc);
			for (std::size_t i = 1; i < args.size(); ++i)
				acc = sum(acc, negate(arith(args[i])));
			return acc;
		}
		if (op == "*") {
			if (args.empty())
				fail(e, "'*' needs arguments");
			LinearTerm acc = arith(args[0]);
			for (std::size_t i = 1; i < args.size(); ++i) {
				LinearTerm f = arith(args[i]);
				if (acc.is_constant())
					acc = scale(f, constant_of(acc));
				else if (f.is_constant())
					acc = scale(acc, constant_of(f));
				else
					unsupported(e, "nonlinear multiplication is not supported");
			}
			return acc;
		}
		if (op == "/") {
			if (args.size() < 2)
				fail(e, "'/' needs at least two arguments");
			LinearTerm acc = arith(args[0]);
			for (std::size_t i = 1; i < args.size(); ++i) {
				LinearTerm d = arith(args[i]);
				if (!d.is_constant())
					unsupported(args[i], "division by a non-constant term is not supported");
				if (d.constant == 0.0)
					unsupported(args[i], "division by zero");
				acc = scale(acc, Coefficient::of(1.0 / d.constant));
			}
			return acc;
		}
		unsupported(e, "operator '" + op + "' is not supported");
	}

	Value let(const SExpr &e)
	{
		if (e.items.size() != 3 || !e.items[1].is_list)
			fail(e, "malformed let");
		std::unordered_map<std::string, Value> scope;
		for (const auto &b : e.items[1].items) {
			if (!b.is_list || b.items.size() != 2 || b.items[0].is_list)
				fail(b, "malformed let binding");
			// bindings are parallel: evaluated in the enclosing scope
			scope.insert_or_assign(b.items[0].token, term(b.items[1]));
		}
		lets_.push_back(std::move(scope));
		Value body = term(e.items[2]);
		lets_.pop_back();
		return body;
	}

	Value relation(const SExpr &e, const std::string &op, std::span<const SExpr> args)
	{
		if (args.size() < 2)
			fail(e, "'" + op + "' needs at least two arguments");
		std::vector<Value> vals;
		for (const auto &a : args)
			vals.push_back(term(a));

		bool all_bool = true, all_real = true;
		for (const auto &v : vals) {
			all_bool = all_bool && std::holds_alternative<FormulaAst>(v);
			all_real = all_real && std::holds_alternative<LinearTerm>(v);
		}
		std::vector<FormulaAst> parts;
		if (op == "=" && all_bool) {
			for (std::size_t i = 0; i + 1 < vals.size(); ++i)
				parts.push_back(FormulaAst::node(NodeKind::Iff,
				    {std::get<FormulaAst>(vals[i]), std::get<FormulaAst>(vals[i + 1])}));
		} else if (all_real) {
			RawRelation raw = op == "=" ? RawRelation::EQ
				: op == "<" ? RawRelation::LT
				: op == "<=" ? RawRelation::LE
				: op == ">" ? RawRelation::GT : RawRelation::GE;
			for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
				const auto &l = std::get<LinearTerm>(vals[i]);
				const auto &r = std::get<LinearTerm>(vals[i + 1]);
				if (r.is_constant())
					parts.push_back(normalize_atom(raw, l, constant_of(r)));
				else
					parts.push_back(normalize_atom(raw, sum(l, negate(r)), Coefficient{0.0, "0"}));
			}
		} else {
			fail(e, "'" + op + "' applied to arguments of mixed or wrong sort");
		}
		if (parts.size() == 1)
			return std::move(parts.front());
		return FormulaAst::node(NodeKind::And, std::move(parts));
	}
};

} // namespace

Formula parse_smt2(std::string_view text)
{
	Reader reader(text);
	return Translator{}.run(reader.read_all());
}

Formula parse_smt2_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw UnsupportedError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_smt2(ss.str());
}

} // namespace ttc
