//! Checks for the independence-number toolbox and the worked introductory
//! examples: clique-coclique, product independence numbers, density
//! monotonicity, and the background facts about derangement graphs.

use super::corpus::{self, SUBGROUP_PAIRS};
use super::{CheckDef, Config, Instance, Kind};
use crate::clique::{self, reference};
use crate::error::{Error, Result};
use crate::graph::{derangement_graph, Graph};
use crate::perm::Permutation;
use crate::product;
use crate::rational::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(super) fn register(defs: &mut Vec<CheckDef>) {
    defs.push(CheckDef {
        id: "sec1-examples",
        statement: "worked examples: rho(A4) = 1 with a non-coset maximum intersecting set, \
                    rho(A5 on 2-subsets) = 2, the natural symmetric actions are strictly \
                    coset-maximal, strict implies EKR, and rho >= 1 with equality exactly at EKR",
        kind: Kind::Claim,
        run: sec1_examples,
    });
    defs.push(CheckDef {
        id: "lem-2.1",
        statement: "vertex-transitive graphs satisfy alpha * omega <= |V|",
        kind: Kind::Claim,
        run: clique_coclique_bound,
    });
    defs.push(CheckDef {
        id: "lem-2.3",
        statement: "every maximum clique of a strong product is the product of maximum cliques \
                    of the factors",
        kind: Kind::Claim,
        run: strong_product_cliques,
    });
    defs.push(CheckDef {
        id: "lem-2.4",
        statement: "for vertex-transitive factors, alpha(X x Y) = max(alpha(X)|V(Y)|, \
                    alpha(Y)|V(X)|)",
        kind: Kind::Claim,
        run: tensor_alpha,
    });
    defs.push(CheckDef {
        id: "lem-2.5",
        statement: "for vertex-transitive X, alpha of the n-th tensor power is \
                    alpha(X) * |V(X)|^(n-1)",
        kind: Kind::Claim,
        run: tensor_power_alpha,
    });
    defs.push(CheckDef {
        id: "lem-2.6",
        statement: "alpha(X[Y]) = alpha(X) * alpha(Y) for the lexicographic product",
        kind: Kind::Claim,
        run: lexicographic_alpha,
    });
    defs.push(CheckDef {
        id: "lem-2.7",
        statement: "a transitive subgroup has intersection density at least that of the \
                    overgroup",
        kind: Kind::Claim,
        run: density_monotone,
    });
    defs.push(CheckDef {
        id: "mrs21-background",
        statement: "derangement graphs of transitive actions of degree at least 3 contain a \
                    triangle and are not bipartite",
        kind: Kind::Claim,
        run: background_triangles,
    });
    defs.push(CheckDef {
        id: "solver-exactness",
        statement: "branch-and-bound clique and independence numbers agree with plain \
                    exhaustive recursion",
        kind: Kind::Infrastructure,
        run: solver_exactness,
    });
}

fn sec1_examples(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let mut out = Vec::new();

    // A4 in its natural action: density 1, yet a maximum intersecting set
    // that is not a coset exists.
    let a4 = c.entry("A4");
    let target: Vec<usize> = {
        let mut ids: Vec<usize> = ["()", "(1 3 2)", "(1 4 2)"]
            .iter()
            .map(|s| {
                let p = Permutation::parse_cycles(s, 4)?;
                a4.action
                    .id_of(&p)
                    .ok_or_else(|| Error::Spec(format!("{s} not in A4")))
            })
            .collect::<Result<_>>()?;
        ids.sort_unstable();
        ids
    };
    let enumeration = clique::maximum_independent_sets(&a4.graph, cfg.mis_cap, cfg.solver_budget)?;
    let found = enumeration.sets.iter().any(|s| *s == target);
    let non_coset = a4.action.as_point_coset(&target).is_none();
    let independent = clique::is_independent_set(&a4.graph, &target);
    out.push(
        Instance::check(
            "A4 natural",
            a4.rho == Rational::one()
                && a4.ekr
                && !a4.strict
                && found
                && non_coset
                && independent
                && !enumeration.truncated,
            format!(
                "rho = {}, alpha = {}, {} maximum intersecting sets, named non-coset set \
                 enumerated = {found}",
                a4.rho,
                a4.alpha,
                enumeration.sets.len()
            ),
        )
        .with_witness("{(), (1 3 2), (1 4 2)}".to_string()),
    );

    // A5 moving unordered pairs: a maximum intersecting set twice the
    // stabilizer size.
    let a5p = c.entry("A5 on 2-subsets");
    out.push(Instance::check(
        "A5 on 2-subsets",
        a5p.alpha == 12 && a5p.max_stab == 6 && a5p.rho == Rational::integer(2),
        format!(
            "alpha = {}, stabilizer order = {}, rho = {}",
            a5p.alpha, a5p.max_stab, a5p.rho
        ),
    ));

    // Natural symmetric actions: every maximum intersecting set is a coset.
    for key in ["S2", "S3", "S4", "S5"] {
        let e = c.entry(key);
        out.push(Instance::check(
            format!("{key} natural"),
            e.strict && e.ekr,
            format!("strict = {}, {} maximum intersecting sets, all cosets", e.strict, e.mis_count),
        ));
    }

    // Definitional consequences across the whole corpus.
    let mut strict_implies_ekr = true;
    let mut density_floor = true;
    for e in &c.entries {
        if e.strict && !e.ekr {
            strict_implies_ekr = false;
        }
        if e.rho < Rational::one() || (e.rho == Rational::one()) != e.ekr {
            density_floor = false;
        }
    }
    out.push(Instance::check(
        "corpus-wide",
        strict_implies_ekr && density_floor,
        format!(
            "strict implies EKR on all {} entries; rho >= 1 throughout with rho = 1 exactly \
             at the EKR entries",
            c.entries.len()
        ),
    ));
    Ok(out)
}

fn clique_coclique_bound(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let mut out = Vec::new();
    for e in &c.entries {
        let cc = clique::clique_coclique(&e.graph, cfg.solver_budget)?;
        out.push(Instance::check(
            format!("derangement graph of {}", e.key),
            cc.bound_holds && cc.alpha == e.alpha,
            format!(
                "alpha = {}, omega = {}, alpha * omega = {} <= {}",
                cc.alpha,
                cc.omega,
                cc.alpha * cc.omega,
                cc.vertices
            ),
        ));
    }
    for (name, g) in [
        ("C5", Graph::cycle(5)),
        ("Petersen", Graph::petersen()),
        ("K7", Graph::complete(7)),
    ] {
        let cc = clique::clique_coclique(&g, cfg.solver_budget)?;
        out.push(Instance::check(
            name,
            cc.bound_holds,
            format!(
                "alpha = {}, omega = {}, alpha * omega = {} <= {}",
                cc.alpha,
                cc.omega,
                cc.alpha * cc.omega,
                cc.vertices
            ),
        ));
    }
    Ok(out)
}

/// Checks that a maximum clique of `x (strong) y` is a product set whose
/// projections are maximum cliques of the factors.
fn factored_cliques(
    name: &str,
    x: &Graph,
    y: &Graph,
    cfg: &Config,
) -> Result<Instance> {
    let product = x.strong_product(y, cfg.graph_cap)?;
    let (wx, _) = match clique::max_clique(x, cfg.solver_budget) {
        Ok(o) => (o.size, o.nodes),
        Err(e) => return Err(e),
    };
    let wy = clique::max_clique(y, cfg.solver_budget)?.size;
    let wp = clique::max_clique(&product, cfg.solver_budget)?.size;
    if wp != wx * wy {
        return Ok(Instance::fail(
            name,
            format!("omega of the product is {wp}, expected {wx} * {wy}"),
        ));
    }
    let ny = y.vertex_count();
    let cliques = clique::enumerate_cliques_of_size(&product, wp, cfg.mis_cap, cfg.solver_budget)?;
    if cliques.truncated {
        return Ok(Instance::skip(
            name,
            format!("clique enumeration truncated at {} sets", cliques.sets.len()),
        ));
    }
    for set in &cliques.sets {
        let mut xs: Vec<usize> = set.iter().map(|v| v / ny).collect();
        let mut ys: Vec<usize> = set.iter().map(|v| v % ny).collect();
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        if set.len() != xs.len() * ys.len() || xs.len() != wx || ys.len() != wy {
            return Ok(Instance::fail(
                name,
                format!("maximum clique {set:?} is not a product of maximum factor cliques"),
            ));
        }
    }
    Ok(Instance::pass(
        name,
        format!(
            "all {} maximum cliques of size {} factor as {}-clique x {}-clique",
            cliques.sets.len(),
            wp,
            wx,
            wy
        ),
    ))
}

fn strong_product_cliques(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let s3c = c.entry("S3").graph.complement();
    let a4c = c.entry("A4").graph.complement();
    let mut out = Vec::new();
    out.push(factored_cliques(
        "complement of the S3 derangement graph, squared",
        &s3c,
        &s3c,
        cfg,
    )?);
    out.push(factored_cliques(
        "complements for A4 and S3",
        &a4c,
        &s3c,
        cfg,
    )?);
    out.push(factored_cliques("C5 x C5", &Graph::cycle(5), &Graph::cycle(5), cfg)?);
    out.push(factored_cliques(
        "Petersen x K2",
        &Graph::petersen(),
        &Graph::complete(2),
        cfg,
    )?);
    Ok(out)
}

/// Instance helper: turn a budget error into an honest skip.
fn alpha_or_skip(
    name: &str,
    g: &Graph,
    budget: u64,
    body: impl FnOnce(usize) -> Instance,
) -> Instance {
    match clique::independence_number(g, budget) {
        Ok(alpha) => body(alpha),
        Err(Error::Budget { budget, .. }) => Instance::skip(
            name,
            format!("independence solve exceeded the {budget}-node budget"),
        ),
        Err(e) => Instance::fail(name, format!("solver error: {e}")),
    }
}

fn tensor_alpha(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let s3 = &c.entry("S3").graph;
    let a4 = &c.entry("A4").graph;
    let s4 = &c.entry("S4").graph;
    let named: Vec<(String, &Graph, &Graph, usize, usize)> = vec![
        ("S3 with S3".into(), s3, s3, 2, 2),
        ("S3 with A4".into(), s3, a4, 2, 3),
        ("A4 with A4".into(), a4, a4, 3, 3),
        ("S4 with S3".into(), s4, s3, 6, 2),
    ];
    let c5 = Graph::cycle(5);
    let petersen = Graph::petersen();
    let k3 = Graph::complete(3);
    let mut out = Vec::new();
    for (name, x, y, ax, ay) in &named {
        let product = x.direct_product(y, cfg.graph_cap)?;
        let expected = (ax * y.vertex_count()).max(ay * x.vertex_count());
        out.push(alpha_or_skip(name, &product, cfg.solver_budget, |alpha| {
            Instance::check(
                name.clone(),
                alpha == expected,
                format!("alpha = {alpha}, expected max({ax} * {}, {ay} * {}) = {expected}",
                    y.vertex_count(), x.vertex_count()),
            )
        }));
    }
    for (name, x, y, ax, ay) in [
        ("C5 with Petersen", &c5, &petersen, 2usize, 4usize),
        ("K3 with C5", &k3, &c5, 1, 2),
    ] {
        let product = x.direct_product(y, cfg.graph_cap)?;
        let expected = (ax * y.vertex_count()).max(ay * x.vertex_count());
        out.push(alpha_or_skip(name, &product, cfg.solver_budget, |alpha| {
            Instance::check(
                name,
                alpha == expected,
                format!("alpha = {alpha}, expected {expected}"),
            )
        }));
    }
    Ok(out)
}

fn tensor_power_alpha(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let mut out = Vec::new();
    let cases: Vec<(String, Graph, usize, usize)> = vec![
        ("S3 derangement graph, square".into(), c.entry("S3").graph.clone(), 2, 2),
        ("S3 derangement graph, cube".into(), c.entry("S3").graph.clone(), 3, 2),
        ("A4 derangement graph, square".into(), c.entry("A4").graph.clone(), 2, 3),
        ("S4 derangement graph, square".into(), c.entry("S4").graph.clone(), 2, 6),
        ("K4, cube".into(), Graph::complete(4), 3, 1),
        ("C5, square".into(), Graph::cycle(5), 2, 2),
    ];
    for (name, x, n, ax) in cases {
        let power = x.direct_power(n, cfg.graph_cap)?;
        let expected = ax * x.vertex_count().pow(n as u32 - 1);
        let budget = super::scaled_budget(power.vertex_count(), cfg.solver_budget);
        out.push(alpha_or_skip(&name, &power, budget, |alpha| {
            Instance::check(
                name.clone(),
                alpha == expected,
                format!("alpha = {alpha}, expected {ax} * {}^{} = {expected}",
                    x.vertex_count(), n - 1),
            )
        }));
    }
    Ok(out)
}

fn lexicographic_alpha(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let mut star = Graph::new(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    let cases: Vec<(String, Graph, Graph)> = vec![
        ("C6 over K3".into(), Graph::cycle(6), Graph::complete(3)),
        ("Petersen over C5".into(), Graph::petersen(), Graph::cycle(5)),
        ("S3 derangement graph over C4".into(), c.entry("S3").graph.clone(), Graph::cycle(4)),
        ("star K(1,3) over C4".into(), star, Graph::cycle(4)),
    ];
    let mut out = Vec::new();
    for (name, x, y) in cases {
        let ax = clique::independence_number(&x, cfg.solver_budget)?;
        let ay = clique::independence_number(&y, cfg.solver_budget)?;
        let product = x.lexicographic_product(&y, cfg.graph_cap)?;
        out.push(alpha_or_skip(&name, &product, cfg.solver_budget, |alpha| {
            Instance::check(
                name.clone(),
                alpha == ax * ay,
                format!("alpha = {alpha}, expected {ax} * {ay} = {}", ax * ay),
            )
        }));
    }
    Ok(out)
}

fn density_monotone(_cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let mut out = Vec::new();
    for (sub, sup) in SUBGROUP_PAIRS {
        let s = c.entry(sub);
        let g = c.entry(sup);
        let contained = s.action.is_subgroup_of(&g.action);
        out.push(Instance::check(
            format!("{sub} inside {sup}"),
            contained && g.rho <= s.rho,
            format!(
                "containment verified = {contained}; rho({sup}) = {} <= rho({sub}) = {}",
                g.rho, s.rho
            ),
        ));
    }
    Ok(out)
}

fn background_triangles(cfg: &Config) -> Result<Vec<Instance>> {
    let c = corpus::standard();
    let mut out = Vec::new();
    for e in &c.entries {
        if e.degree() < 3 {
            continue;
        }
        let triangle = e.graph.triangle();
        let bipartite = e.graph.is_bipartite();
        out.push(Instance::check(
            format!("derangement graph of {}", e.key),
            triangle.is_some() && !bipartite,
            format!("triangle = {triangle:?}, bipartite = {bipartite}"),
        ));
    }
    // Transitivity of the claim extends to product and wreath actions; spot
    // two composite instances.
    let s3 = &c.entry("S3").action;
    let c3 = &c.entry("C3").action;
    let s2 = &c.entry("S2").action;
    for (name, action) in [
        ("S3 x C3".to_string(), product::external_product(s3, c3, cfg.element_cap)?),
        ("S3 wr S2".to_string(), product::wreath_product(s3, s2, cfg.element_cap)?),
    ] {
        let graph = derangement_graph(&action, cfg.graph_cap)?;
        let triangle = graph.triangle();
        let bipartite = graph.is_bipartite();
        out.push(Instance::check(
            name,
            action.is_transitive() && triangle.is_some() && !bipartite,
            format!("triangle = {triangle:?}, bipartite = {bipartite}"),
        ));
    }
    Ok(out)
}

fn solver_exactness(cfg: &Config) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut mismatches = Vec::new();
    let trials = 500;
    for t in 0..trials {
        let n = rng.random_range(1..=20);
        let p = [0.1, 0.3, 0.5, 0.7, 0.9][t % 5];
        let mut g = Graph::new(n);
        for v in 0..n {
            for w in (v + 1)..n {
                if rng.random_bool(p) {
                    g.add_edge(v, w);
                }
            }
        }
        let fast_clique = clique::max_clique(&g, cfg.solver_budget)?;
        let brute_omega = reference::max_clique_brute(&g);
        let fast_alpha = clique::max_independent_set(&g, cfg.solver_budget)?;
        let brute_alpha = reference::independence_brute(&g);
        let witness_ok = fast_clique.witness.len() == fast_clique.size
            && fast_clique
                .witness
                .iter()
                .enumerate()
                .all(|(i, &v)| fast_clique.witness.iter().skip(i + 1).all(|&w| g.has_edge(v, w)))
            && clique::is_independent_set(&g, &fast_alpha.witness)
            && fast_alpha.witness.len() == fast_alpha.size;
        if fast_clique.size != brute_omega || fast_alpha.size != brute_alpha || !witness_ok {
            mismatches.push(format!(
                "trial {t}: n = {n}, p = {p}, omega {} vs {brute_omega}, alpha {} vs {brute_alpha}",
                fast_clique.size, fast_alpha.size
            ));
        }
    }
    out.push(if mismatches.is_empty() {
        Instance::pass(
            format!("{trials} random graphs on at most 20 vertices, seed {}", cfg.seed),
            "clique and independence numbers and witnesses all match exhaustive recursion",
        )
    } else {
        Instance::fail(
            format!("{trials} random graphs on at most 20 vertices, seed {}", cfg.seed),
            mismatches.join("; "),
        )
    });

    let c = corpus::standard();
    let mut omega_checked = 0;
    let mut alpha_checked = 0;
    let mut failures = Vec::new();
    for e in &c.entries {
        let fast = clique::max_clique(&e.graph, cfg.solver_budget)?.size;
        let brute = reference::max_clique_brute(&e.graph);
        omega_checked += 1;
        if fast != brute {
            failures.push(format!("omega mismatch on {}: {fast} vs {brute}", e.key));
        }
        // Dense complements make the plain recursion visit every intersecting
        // set, so the alpha side is only brute-forced at small order.
        if e.order() <= 24 {
            let brute_alpha = reference::independence_brute(&e.graph);
            alpha_checked += 1;
            if e.alpha != brute_alpha {
                failures.push(format!(
                    "alpha mismatch on {}: {} vs {brute_alpha}",
                    e.key, e.alpha
                ));
            }
        }
    }
    out.push(if failures.is_empty() {
        Instance::pass(
            "corpus derangement graphs",
            format!(
                "{omega_checked} clique numbers and {alpha_checked} independence numbers \
                 match exhaustive recursion"
            ),
        )
    } else {
        Instance::fail("corpus derangement graphs", failures.join("; "))
    });
    Ok(out)
}
