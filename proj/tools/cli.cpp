/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "cli.hpp"

#include "ttc/bench.hpp"
#include "ttc/errors.hpp"
#include "ttc/pipeline.hpp"
#include "ttc/smtlib.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace ttc::cli {

namespace {

using nlohmann::ordered_json;

struct EstimateFlags {
	std::string file;
	double eps = 0.8;
	double delta = 0.2;
	std::uint64_t seed = 1;
	double timeout = 0.0;
	unsigned jobs = 1;
	int precision = -1;
	std::string log_base = "e";
	std::string units = "cells";
	bool cubes_only = false;
	std::size_t cube_limit = 0;
};

struct GenFlags {
	std::string shape = "cube";
	std::size_t n = 2;
	std::size_t m = 1;
	std::uint64_t seed = 0;
	bool axis_aligned = false;
	std::string output;
};

struct OracleFlags {
	std::string file;
	bool mc = false;
	std::size_t samples = 1000000;
	std::uint64_t seed = 1;
};

struct DecomposeFlags {
	std::string file;
	std::string output;
	std::string aig;
};

void add_estimate_flags(CLI::App *cmd, EstimateFlags &f, bool formula)
{
	cmd->add_option("file", f.file, formula ? "SMT-LIB2 QF_LRA file" : "polytope-union file")
		->required();
	cmd->add_option("--epsilon", f.eps, "relative error target in (0,1]");
	cmd->add_option("--delta", f.delta, "failure probability in (0,1]");
	cmd->add_option("--seed", f.seed, "random seed");
	cmd->add_option("--timeout", f.timeout, "wall-clock budget in seconds (0 = none)");
	cmd->add_option("--jobs", f.jobs, "threads computing volumes ahead of the sketch");
	cmd->add_option("--precision-override", f.precision, "fixed lattice precision");
	cmd->add_option("--log-base", f.log_base, "logarithm in the precision bound: e, 2 or 10");
	cmd->add_option("--units", f.units, "sketch measure: cells (default) or volume");
	if (formula) {
		cmd->add_flag("--cubes-only", f.cubes_only, "print the polytope union and stop");
		cmd->add_option("--cube-limit", f.cube_limit, "fail if more cubes are found (0 = none)");
	}
}

RunOptions options_of(const EstimateFlags &f)
{
	if (!(f.eps > 0.0 && f.eps <= 1.0))
		throw ContractError("--epsilon must lie in (0, 1]");
	if (!(f.delta > 0.0 && f.delta <= 1.0))
		throw ContractError("--delta must lie in (0, 1]");
	if (f.jobs < 1)
		throw ContractError("--jobs must be at least 1");
	if (f.timeout < 0.0)
		throw ContractError("--timeout must be non-negative");
	RunOptions o;
	o.eps = f.eps;
	o.delta = f.delta;
	o.seed = f.seed;
	o.jobs = f.jobs;
	if (f.timeout > 0.0)
		o.timeout_s = f.timeout;
	if (f.precision >= 0)
		o.precision_override = f.precision;
	if (f.log_base == "e")
		o.log_base = LogBase::E;
	else if (f.log_base == "2")
		o.log_base = LogBase::Two;
	else if (f.log_base == "10")
		o.log_base = LogBase::Ten;
	else
		throw ContractError("--log-base must be e, 2 or 10");
	if (f.units == "cells")
		o.units = SketchUnits::Cells;
	else if (f.units == "volume")
		o.units = SketchUnits::Volume;
	else
		throw ContractError("--units must be cells or volume");
	if (f.cube_limit > 0)
		o.cube_limit = f.cube_limit;
	return o;
}

ordered_json report_json(const RunReport &r)
{
	ordered_json j;
	j["schema"] = 1;
	j["status"] = r.status == RunStatus::Ok ? "ok" : "timeout";
	j["estimate"] = r.estimate;
	j["dim"] = r.dim;
	j["m"] = r.m;
	j["preci"] = r.preci;
	j["thresh"] = r.thresh;
	j["eps"] = r.eps;
	j["delta"] = r.delta;
	j["seed"] = r.seed;
	j["gamma"] = r.gamma;
	j["max_ratio"] = r.max_ratio;
	ordered_json polys = ordered_json::array();
	for (const auto &p : r.polytopes) {
		ordered_json q;
		q["index"] = p.index;
		q["facets_in"] = p.facets_in;
		q["facets"] = p.facets;
		q["radius"] = p.radius;
		q["degenerate"] = p.degenerate;
		q["volume"] = p.volume;
		q["volume_converged"] = p.volume_converged;
		q["removed"] = p.removed;
		q["N"] = p.drawn;
		q["sketch_size"] = p.sketch_size;
		q["p_exponent"] = p.p_exponent;
		q["volume_ms"] = p.volume_ms;
		q["sample_ms"] = p.sample_ms;
		polys.push_back(std::move(q));
	}
	j["polytopes"] = std::move(polys);
	j["warnings"] = r.warnings;
	j["enumerate_ms"] = r.enumerate_ms;
	j["prepare_ms"] = r.prepare_ms;
	j["total_ms"] = r.total_ms;
	return j;
}

ordered_json error_json(const std::string &status, const std::string &msg)
{
	ordered_json j;
	j["schema"] = 1;
	j["status"] = status;
	j["error"] = msg;
	return j;
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw UnsupportedError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_text(const std::string &path, const std::string &text, std::ostream &out)
{
	if (path.empty() || path == "-") {
		out << text;
		return;
	}
	std::ofstream f(path, std::ios::binary);
	if (!f)
		throw UnsupportedError("cannot write '" + path + "'");
	f << text;
}

int finish_run(const RunReport &rep, std::ostream &out, std::ostream &err)
{
	for (const auto &w : rep.warnings)
		err << "warning: " << w << '\n';
	out << report_json(rep).dump(2) << '\n';
	if (rep.status == RunStatus::Timeout) {
		err << "timeout: budget exhausted\n";
		return kTimeout;
	}
	return kOk;
}

int cmd_estimate(const EstimateFlags &f, std::ostream &out, std::ostream &err)
{
	RunOptions opt = options_of(f);
	Formula formula = parse_smt2(read_file(f.file));
	if (f.cubes_only) {
		Decomposition d = decompose(formula, opt.cube_limit);
		std::ostringstream ss;
		write_union(ss, d.polytopes, static_cast<Eigen::Index>(formula.vars.dimension()));
		out << ss.str();
		err << d.cubes.size() << " cubes\n";
		return kOk;
	}
	RunReport rep = estimate_formula(formula, opt);
	err << "estimate " << rep.estimate << " from " << rep.m << " polytopes in "
	    << rep.total_ms << " ms\n";
	return finish_run(rep, out, err);
}

int cmd_estimate_polytopes(const EstimateFlags &f, std::ostream &out, std::ostream &err)
{
	RunOptions opt = options_of(f);
	std::vector<Polytope> polys = read_union_file(f.file);
	RunReport rep = estimate_polytopes(polys, opt);
	err << "estimate " << rep.estimate << " from " << rep.m << " polytopes in "
	    << rep.total_ms << " ms\n";
	return finish_run(rep, out, err);
}

int cmd_decompose(const DecomposeFlags &f, std::ostream &out, std::ostream &err)
{
	Formula formula = parse_smt2(read_file(f.file));
	Decomposition d = decompose(formula);
	std::ostringstream ss;
	ss << "# " << d.cubes.size() << " cubes over " << d.abstraction.circuit.num_inputs()
	   << " inputs\n";
	write_union(ss, d.polytopes, static_cast<Eigen::Index>(formula.vars.dimension()));
	write_text(f.output, ss.str(), out);
	if (!f.aig.empty())
		write_text(f.aig, to_aiger_ascii(d.abstraction.circuit), out);
	err << d.cubes.size() << " cubes, " << d.abstraction.circuit.num_gates() << " gates\n";
	return kOk;
}

int cmd_gen(const GenFlags &f, std::ostream &out, std::ostream &err)
{
	BenchSpec spec;
	if (f.shape == "cube")
		spec.shape = Shape::Cube;
	else if (f.shape == "simplex")
		spec.shape = Shape::Simplex;
	else
		throw ContractError("--shape must be cube or simplex");
	if (f.n < 1 || f.m < 1)
		throw ContractError("--n and --m must be at least 1");
	spec.n = f.n;
	spec.m = f.m;
	spec.seed = f.seed;
	spec.axis_aligned = f.axis_aligned;
	write_text(f.output, gen_instance(spec).smt2, out);
	err << "generated " << f.m << " " << f.shape << (f.m == 1 ? "" : "s") << " in dimension "
	    << f.n << '\n';
	return kOk;
}

int cmd_oracle(const OracleFlags &f, std::ostream &out, std::ostream &)
{
	std::vector<Polytope> polys = read_union_file(f.file);
	ordered_json j;
	j["schema"] = 1;
	j["status"] = "ok";
	if (f.mc) {
		if (f.samples == 0)
			throw ContractError("--samples must be positive");
		Rng rng = derive_stream(f.seed, StreamTag::Oracle);
		McEstimate e = grid_mc_union(polys, f.samples, rng);
		j["method"] = "mc";
		j["estimate"] = e.estimate;
		j["ci99_half_width"] = e.half_width;
		j["samples"] = e.samples;
		j["hits"] = e.hits;
		j["region_volume"] = e.region_volume;
	} else {
		std::vector<Box> boxes;
		for (const auto &P : polys)
			boxes.push_back(box_of(P));
		j["method"] = "exact";
		j["volume"] = exact_box_union(boxes);
	}
	out << j.dump(2) << '\n';
	return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"ttc: volume of QF_LRA formulas and polytope unions"};
	app.name("ttc");
	app.require_subcommand(1);

	EstimateFlags est, estp;
	auto *c_est = app.add_subcommand("estimate", "estimate the solution-space volume of a formula");
	add_estimate_flags(c_est, est, true);
	auto *c_estp = app.add_subcommand("estimate-polytopes", "estimate the volume of a polytope union");
	add_estimate_flags(c_estp, estp, false);

	DecomposeFlags dec;
	auto *c_dec = app.add_subcommand("decompose", "write the cube polytopes of a formula");
	c_dec->add_option("file", dec.file, "SMT-LIB2 QF_LRA file")->required();
	c_dec->add_option("-o,--output", dec.output, "output path (default stdout)");
	c_dec->add_option("--aig", dec.aig, "also write the circuit as ASCII AIGER");

	GenFlags gen;
	auto *c_gen = app.add_subcommand("gen", "generate a benchmark formula");
	c_gen->add_option("--shape", gen.shape, "cube or simplex");
	c_gen->add_option("--n", gen.n, "dimension");
	c_gen->add_option("--m", gen.m, "number of polytopes");
	c_gen->add_option("--seed", gen.seed, "random seed");
	c_gen->add_flag("--axis-aligned", gen.axis_aligned, "skip rotations");
	c_gen->add_option("-o,--output", gen.output, "output path (default stdout)");

	OracleFlags orc;
	auto *c_orc = app.add_subcommand("oracle", "reference volume of a polytope union");
	c_orc->add_option("file", orc.file, "polytope-union file")->required();
	c_orc->add_flag("--mc", orc.mc, "Monte Carlo instead of the exact box union");
	c_orc->add_option("--samples", orc.samples, "Monte Carlo sample count");
	c_orc->add_option("--seed", orc.seed, "random seed");

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try {
		app.parse(std::move(rev));
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError &e) {
		err << "usage error: " << e.what() << '\n';
		out << error_json("usage", e.what()).dump(2) << '\n';
		return kUnsupported;
	}

	auto fail = [&](const char *status, const std::exception &e, int code) {
		err << status << ": " << e.what() << '\n';
		out << error_json(status, e.what()).dump(2) << '\n';
		return code;
	};

	try {
		if (c_est->parsed())
			return cmd_estimate(est, out, err);
		if (c_estp->parsed())
			return cmd_estimate_polytopes(estp, out, err);
		if (c_dec->parsed())
			return cmd_decompose(dec, out, err);
		if (c_gen->parsed())
			return cmd_gen(gen, out, err);
		if (c_orc->parsed())
			return cmd_oracle(orc, out, err);
	} catch (const TimeoutError &e) {
		return fail("timeout", e, kTimeout);
	} catch (const ParseError &e) {
		return fail("parse-error", e, kUnsupported);
	} catch (const UnboundedError &e) {
		return fail("unbounded", e, kUnsupported);
	} catch (const UnsupportedError &e) {
		return fail("unsupported", e, kUnsupported);
	} catch (const ContractError &e) {
		return fail("usage", e, kUnsupported);
	} catch (const TruncationError &e) {
		return fail("truncated", e, kUnsupported);
	} catch (const NumericalError &e) {
		return fail("numerical", e, kNumerical);
	}
	return kUnsupported;
}

} // namespace ttc::cli
