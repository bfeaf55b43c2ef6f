use shapedecomp::decompose::*;
use shapedecomp::harmonics::{check_syzygies, degree_dimensions};
use shapedecomp::ringcore::rank;
use shapedecomp::rng::seeded;
use shapedecomp::shapes::*;
use shapedecomp::symgroup::{block_sizes, rep_e, rep_e_bar, reproduces_multiplication_table, verify_character_identities};

/// One row of the pass table.
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), passed, detail: detail.into() }
}

const BLOCK_SIZES: [usize; 11] = [1, 1, 1, 1, 4, 4, 4, 4, 4, 4, 8];

pub fn shapes_checks() -> Vec<Check> {
    let set = shapes();
    let mut out = vec![
        check("syzygies vanish", check_syzygies().all_zero(), ""),
        check("degree counts (1,2,2,1)", degree_dimensions(3) == [1, 2, 2, 1], format!("{:?}", degree_dimensions(3))),
        check("shapes alternating", set.shapes.iter().all(|s| s.is_alternating()), format!("{} shapes", set.shapes.len())),
        check("shapes independent", rank(&set.shapes) == 36, format!("rank {}", rank(&set.shapes))),
        check("shape block sizes", set.block_sizes() == BLOCK_SIZES, format!("{:?}", set.block_sizes())),
    ];
    match verify_derivative_span() {
        Ok(r) => out.push(check("derivative span", r.passed(), format!("rank {}, missing {:?}", r.rank, r.missing))),
        Err(e) => out.push(check("derivative span", false, e.to_string())),
    }
    out.push(check("septiplet identity", septiplet_identity(), ""));
    let q = q_basis();
    let (o, p) = (orthogonality_violations(&q), parity_violations(&q));
    out.push(check("Q-basis orthogonality", o.is_empty(), format!("{} violations", o.len())));
    out.push(check("Q-basis parity", p.is_empty(), format!("{} violations; rows {:?} corrected", p.len(), corrected_rows())));
    out
}

pub fn group_checks() -> Vec<Check> {
    let mut out: Vec<Check> = verify_character_identities().checks.into_iter().map(|(n, ok)| check(&n, ok, "")).collect();
    out.push(check("character block sizes", block_sizes() == BLOCK_SIZES, format!("{:?}", block_sizes())));
    out.push(check("E representation", reproduces_multiplication_table(&rep_e()), ""));
    out.push(check("conjugate E representation", reproduces_multiplication_table(&rep_e_bar()), ""));
    out
}

pub fn decompose_checks(seed: u64) -> Vec<Check> {
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    let m = eta_bar_mismatches_symbolic();
    out.push(check("extraction matrix reproduces η̄", m.is_empty(), format!("{} mismatches", m.len())));
    let mut good = 0;
    for _ in 0..5 {
        let pt = random_generic_point(&mut rng);
        good += (4..=7).filter(|&w| linear_block_inverse_holds_at(w, &pt)).count();
        good += chi8_inverse_holds_at(&pt) as usize;
    }
    out.push(check("block inverses", good == 25, format!("{good}/25 exact identities")));
    let (ok, detail) = round_trips(&mut rng, 3);
    out.push(check("symbolic round trips", ok, detail));
    out
}

/// Random Ψ = Σ pᵢSᵢ, extracted and compared with the pᵢ.
pub fn round_trips(rng: &mut shapedecomp::rng::Rng, count: usize) -> (bool, String) {
    let mut good = 0;
    for _ in 0..count {
        let (psi, p) = random_alternating(rng, 4, 2);
        if let Ok(phi) = extract_bosonic_symbolic(&psi) {
            if phi.phi == p && phi.all_bosonic() && reconstruct(&phi) == psi {
                good += 1;
            }
        }
    }
    (good == count, format!("{good}/{count} recovered exactly"))
}

pub fn print_table(title: &str, checks: &[Check]) -> bool {
    println!("== {title}");
    for c in checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{tag}  {}", c.name);
        } else {
            println!("{tag}  {}  ({})", c.name, c.detail);
        }
    }
    checks.iter().all(|c| c.passed)
}
