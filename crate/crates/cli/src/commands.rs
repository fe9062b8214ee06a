use serde_json::{json, Value};
use symconf::configs::{
    central_symmetrize, graph_config_rho, graph_config_rho_reduced, is_configuration, non_unimodularity_witness,
    ColumnRole,
};
use symconf::error::Error;
use symconf::graphs::{
    disjoint_odd_cycles_bridged, find_disjoint_odd_cycles, is_chordal_bipartite, merge_split_rows,
    satisfies_star_condition, split_apex, Bipartition, Graph,
};
use symconf::intlin::{bigint_json, gcd_maximal_minors, hnf, is_unimodular, lattice_index, rank, IntMatrix};
use symconf::polytope::{csc_polytope_with, pulling_triangulation_with, PolytopeLimits};
use symconf::semigroup::{hilbert_h_vector_with, normality_check_with, SemigroupOptions};
use symconf::toric::{
    check_reduced_gb, csc_variable_names, initial_ideal, is_squarefree, kernel_lattice,
    minimal_generator_degrees_with, plain_variable_names, theorem42_basis, toric_ideal_gb_with, verify_reduced_gb,
    GbOptions, GroebnerBasis, MonomialDisplay, TermOrder,
};

use crate::input::{InputArgs, Target};
use crate::report::{CliError, Report};

type Outcome = Result<(), CliError>;

fn lattice_index_json(a: &IntMatrix) -> Value {
    match lattice_index(a).finite() {
        Some(v) => bigint_json(v),
        None => json!("infinite"),
    }
}

fn role_name(role: &ColumnRole) -> String {
    match role {
        ColumnRole::Center => "center".into(),
        ColumnRole::Plus(i) => format!("+{}", i + 1),
        ColumnRole::Minus(i) => format!("-{}", i + 1),
    }
}

pub fn analyze(input: &InputArgs, report: &mut Report) -> Outcome {
    let target = input.load()?;
    report.inputs = target.echo.clone();
    let a = &target.base;
    let r = rank(a);
    let h = hnf(a);
    let mut results = json!({
        "rows": a.rows(),
        "cols": a.cols(),
        "rank": r,
        "lattice_index": lattice_index_json(a),
        "gcd_maximal_minors": bigint_json(&gcd_maximal_minors(a)),
        "hnf_block": h.b.as_ref().map(IntMatrix::to_json),
        "configuration_certificate": is_configuration(a)
            .map(|c| c.iter().map(|q| q.to_string()).collect::<Vec<_>>()),
    });
    report.results = results.clone();
    if r < a.rows() {
        return Err(Error::RankDeficient { rank: r, rows: a.rows() }.into());
    }
    let u = is_unimodular(a)?;
    results["unimodular"] = json!(u.unimodular);
    results["delta"] = bigint_json(&u.delta);

    let csc = central_symmetrize(a);
    let pair = non_unimodularity_witness(a)?;
    let u_pm = is_unimodular(&csc.matrix)?;
    results["symmetrized"] = json!({
        "matrix": csc.matrix.to_json(),
        "column_roles": csc.column_roles.iter().map(role_name).collect::<Vec<_>>(),
        "lattice_index": lattice_index_json(&csc.matrix),
        "unimodular": u_pm.unimodular,
        "minor_pair": {
            "base_columns": pair.base_columns,
            "base_det": bigint_json(&pair.base_det),
            "first_columns": pair.first_columns,
            "first_minor": bigint_json(&pair.first_minor),
            "second_columns": pair.second_columns,
            "second_minor": bigint_json(&pair.second_minor),
        },
    });
    report.results = results;
    Ok(())
}

pub struct GbArgs {
    pub order: Option<String>,
    pub center_smallest: bool,
    pub budget: u64,
    pub verify: bool,
    pub generator_degrees: bool,
    pub monomial_budget: u64,
}

fn variable_names(target: &Target) -> Vec<String> {
    match &target.csc {
        Some(c) => csc_variable_names(c.base_cols()),
        None => plain_variable_names(target.base.cols()),
    }
}

fn choose_order(target: &Target, args: &GbArgs) -> Result<TermOrder, CliError> {
    let n = target.matrix().cols();
    let name = match (&args.order, args.center_smallest) {
        (Some(o), false) => o.as_str(),
        (None, true) | (Some(_), true) => "center-smallest",
        (None, false) if target.csc.is_some() => "center-smallest",
        (None, false) => "grevlex",
    };
    match name {
        "grevlex" => Ok(TermOrder::grevlex(n)),
        "grlex" => Ok(TermOrder::grlex(n)),
        "center-smallest" => match &target.csc {
            Some(c) => Ok(TermOrder::center_smallest(c.base_cols())),
            None => Err(CliError::Usage("center-smallest needs a symmetrized kind".into())),
        },
        other => Err(CliError::Usage(format!(
            "unknown order {other:?}; expected grevlex, grlex or center-smallest"
        ))),
    }
}

fn gb_json(gb: &GroebnerBasis, names: &[String]) -> Value {
    let leads = initial_ideal(gb);
    json!({
        "basis": gb.to_json(names),
        "size": gb.elements.len(),
        "max_degree": gb.max_degree(),
        "initial_ideal": leads.iter().map(|m| MonomialDisplay { monomial: m, names }.to_string()).collect::<Vec<_>>(),
        "squarefree": is_squarefree(&leads),
    })
}

pub fn gb(input: &InputArgs, args: &GbArgs, report: &mut Report) -> Outcome {
    let target = input.load()?;
    report.inputs = target.echo.clone();
    let order = choose_order(&target, args)?;
    report.limits = json!({ "spair_budget": args.budget });
    let names = variable_names(&target);
    let a = target.matrix();
    let opts = GbOptions {
        spair_budget: args.budget,
        verify: false,
    };
    let gb = match toric_ideal_gb_with(a, &order, &opts) {
        Ok(gb) => gb,
        Err(Error::SPairBudget { budget, partial }) => {
            report.results = json!({ "partial": true, "variables": names, "ideal": gb_json(&partial, &names) });
            return Err(Error::SPairBudget { budget, partial }.into());
        }
        Err(e) => return Err(e.into()),
    };
    let mut results = json!({ "partial": false, "variables": names, "ideal": gb_json(&gb, &names) });
    if args.verify {
        results["verified"] = match check_reduced_gb(&gb, a) {
            Ok(()) => json!(true),
            Err(reason) => json!({ "failed": reason }),
        };
    }
    if args.generator_degrees {
        report.limits["monomial_budget"] = json!(args.monomial_budget);
        let bound = (gb.max_degree() as u32).max(2);
        let degs = minimal_generator_degrees_with(a, bound, args.monomial_budget)?;
        results["generator_degrees"] = json!({
            "bound": bound,
            "counts": degs.iter().map(|(d, c)| (d.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
        });
    }
    report.results = results;
    Ok(())
}

fn parts_json(p: &Bipartition) -> Value {
    json!({ "part1": p.part1, "part2": p.part2 })
}

pub fn graph_report(input: &InputArgs, report: &mut Report) -> Outcome {
    let (g, echo) = input.load_graph()?;
    report.inputs = echo;
    let parts = g.bipartition();
    let connected = g.is_connected();
    let pair = find_disjoint_odd_cycles(&g)?;
    let mut results = json!({
        "vertex_count": g.vertex_count(),
        "edge_count": g.edges().len(),
        "connected": connected,
        "bipartite": parts.is_some(),
        "bipartition": parts.as_ref().map(parts_json),
        "disjoint_odd_cycles": serde_json::to_value(&pair).expect("plain data"),
        "chordal_bipartite": Value::Null,
        "star_condition": Value::Null,
    });
    if let Some(p) = &parts {
        results["chordal_bipartite"] = json!(is_chordal_bipartite(&g)?);
        results["star_condition"] = json!(satisfies_star_condition(&g, p)?);
    }
    if connected {
        let bridged = disjoint_odd_cycles_bridged(&g)?;
        let reduced = graph_config_rho_reduced(&g)?;
        let unimodular = is_unimodular(&reduced)?.unimodular;
        let no_pair = pair.is_none();
        results["disjoint_odd_cycles_bridged"] = json!(bridged);
        results["rho_unimodular"] = json!(unimodular);
        results["unimodular_iff_no_disjoint_pair"] = json!(unimodular == no_pair);
        results["rho_normal_predicted"] = json!(bridged);
        results["rho_pm_normal_predicted"] = json!(no_pair);
    }
    report.results = results;
    Ok(())
}

pub fn hilbert(input: &InputArgs, max_degree: u32, point_budget: u64, report: &mut Report) -> Outcome {
    let target = input.load()?;
    report.inputs = target.echo.clone();
    report.limits = json!({ "max_degree": max_degree, "point_budget": point_budget });
    let c = target.configuration()?;
    let h = hilbert_h_vector_with(&c, max_degree, point_budget)?;
    report.incomplete = !h.stabilized;
    report.results = h.to_json();
    Ok(())
}

pub fn normal(input: &InputArgs, bound: Option<u32>, options: SemigroupOptions, report: &mut Report) -> Outcome {
    let target = input.load()?;
    report.inputs = target.echo.clone();
    let c = target.configuration()?;
    let bound = bound.unwrap_or_else(|| 2 * rank(&c.matrix) as u32);
    report.limits = json!({
        "bound": bound,
        "point_budget": options.point_budget,
        "scan_budget": options.scan_budget,
    });
    let verdict = normality_check_with(&c, bound, options)?;
    report.results = json!({ "bound": bound, "normality": verdict.to_json() });
    Ok(())
}

pub fn fano(input: &InputArgs, triangulate: bool, scan_budget: u64, report: &mut Report) -> Outcome {
    let target = input.load()?;
    report.inputs = target.echo.clone();
    let limits = PolytopeLimits::default();
    report.limits = json!({
        "scan_budget": scan_budget,
        "max_dim": limits.max_dim,
        "max_points": limits.max_points,
    });
    let csc = target
        .csc
        .as_ref()
        .ok_or_else(|| CliError::Usage("fano works on a symmetrized kind (pm, rho± or mu±)".into()))?;
    let p = csc_polytope_with(csc, limits)?;
    let verdict = p.fano_verdict_with(scan_budget)?;
    let mut results = json!({ "polytope": p.to_json(), "verdict": verdict.to_json() });
    if triangulate {
        if rank(&csc.base) < csc.base.rows() {
            return Err(Error::RankDeficient { rank: rank(&csc.base), rows: csc.base.rows() }.into());
        }
        let t = pulling_triangulation_with(csc, &TermOrder::center_smallest(csc.base_cols()), limits)?;
        results["triangulation"] = t.to_json();
    }
    report.results = results;
    Ok(())
}

fn parse_part1(g: &Graph, spec: &str) -> Result<Bipartition, CliError> {
    let mut part1: Vec<usize> = spec
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?} in --part1")))
        })
        .collect::<Result<_, _>>()?;
    part1.sort_unstable();
    part1.dedup();
    let part2 = (1..=g.vertex_count()).filter(|v| !part1.contains(v)).collect();
    Ok(Bipartition { part1, part2 })
}

pub fn theorem42(input: &InputArgs, part1: Option<&str>, report: &mut Report) -> Outcome {
    let (g, echo) = input.load_graph()?;
    report.inputs = echo;
    let parts = match part1 {
        Some(spec) => parse_part1(&g, spec)?,
        None => g
            .bipartition()
            .ok_or_else(|| CliError::Lib(Error::PreconditionViolated("graph is not bipartite".into())))?,
    };
    report.inputs["bipartition"] = parts_json(&parts);
    let t = theorem42_basis(&g, &parts)?;
    report.results = json!({
        "variables": t.names,
        "families": t.families.to_json(&t.names),
        "family_count": t.families.elements.len(),
        "basis": t.basis.to_json(&t.names),
        "basis_count": t.basis.elements.len(),
        "verified": verify_reduced_gb(&t.basis, &t.csc.matrix),
    });
    Ok(())
}

pub fn split_apex_cmd(input: &InputArgs, vertex: usize, budget: u64, report: &mut Report) -> Outcome {
    let (g, echo) = input.load_graph()?;
    report.inputs = echo;
    report.inputs["vertex"] = json!(vertex);
    report.limits = json!({ "spair_budget": budget });
    let split = split_apex(&g, vertex)?;
    let a = graph_config_rho(&g)?;
    let a_split = graph_config_rho(&split)?;
    let merged = merge_split_rows(&a_split)?;
    let order = TermOrder::grevlex(a.cols());
    let opts = GbOptions {
        spair_budget: budget,
        verify: false,
    };
    let gb = toric_ideal_gb_with(&a, &order, &opts)?;
    let gb_split = toric_ideal_gb_with(&a_split, &order, &opts)?;
    let names = plain_variable_names(a.cols());
    report.results = json!({
        "split_graph": { "vertex_count": split.vertex_count(), "edges": split.edges() },
        "bipartite": split.is_bipartite(),
        "rho": a.to_json(),
        "rho_split": a_split.to_json(),
        "rows_merge_back": merged == a,
        "kernels_equal": kernel_lattice(&a) == kernel_lattice(&a_split),
        "ideals_equal": gb == gb_split,
        "ideal": gb.to_json(&names),
    });
    Ok(())
}
