//! The genus-13 threefold: its 42 quadrics, the projection to Q and the
//! birational inverse from P^3.

use projgeom::groebner::{hilbert_data, hilbert_dim_degree, ideals_equal, Ideal};
use projgeom::modfield::FMatrix;
use projgeom::polyring::{jacobian, Polynomial};
use projgeom::varmap::{
    certify, eval_map, image_seeded, image_toric, inverse_fixes_samples, inverse_identity_holds,
    inverse_map_seeded, map_degree_seeded, proportional_forms, same_rational_map, ProjectivePoint,
    RationalMap, IMAGE_DEGREE_BOUND,
};
use projgeom::Result;

use crate::fixtures;
use crate::report::{gb_hash, Ctx, Pair};

/// Fixed points of the involution on (P^1)^3, as `(x, y, z)` coordinate
/// indices that vanish, in the order P1..P4, P1'..P4'.
const FIXED_POINTS: [[usize; 3]; 8] = [
    [1, 0, 0],
    [1, 1, 1],
    [0, 1, 0],
    [0, 0, 1],
    [0, 1, 1],
    [0, 0, 0],
    [1, 0, 1],
    [1, 1, 0],
];

/// Their images, read off the monomial list.
const FIXED_IMAGES: [usize; 8] = [4, 0, 10, 12, 9, 13, 3, 1];

fn forms_text(m: &RationalMap) -> String {
    let f: Vec<String> = m.forms().iter().map(|g| g.to_signed_string()).collect();
    format!("[{}]", f.join(" : "))
}

fn dim_degree(i: &Ideal) -> Result<String> {
    let (d, e) = hilbert_dim_degree(i)?;
    Ok(Pair(d, e).to_string())
}

fn certificate(ctx: &mut Ctx, name: &str, phi: &RationalMap, j: &Ideal) {
    let r = certify(phi, j);
    let actual = match &r {
        Ok(()) => format!("{} generators vanish on the source", j.gens().len()),
        Err(e) => e.to_string(),
    };
    ctx.check(name, "every generator vanishes on the source", actual, r.is_ok());
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let (prime, seed, strategy) = (ctx.prime, ctx.seed, ctx.strategy);
    let pi = fixtures::map(fixtures::PI, prime, None, None)?;
    let w_ring = pi.target().clone();
    let field = w_ring.field();
    let w_fix = fixtures::ideal(fixtures::W_QUADRICS, prime, Some(&w_ring))?;

    let w = ctx.timed("image_pi", || image_seeded(&pi, strategy, IMAGE_DEGREE_BOUND, seed))?;
    let same = ideals_equal(&w, &w_fix)?;
    ctx.coefficient_check("image_equals_42_quadrics", || {
        Ok((gb_hash(&w_fix), gb_hash(&w), same))
    })?;
    let hf = hilbert_data(&w)?.hilbert_function(2);
    let quadrics = 105 - hf as i64;
    ctx.check_eq("quadrics_in_image", 42, quadrics);
    ctx.check_eq("dim_degree_W", "(3, 24)", dim_degree(&w)?);
    certificate(ctx, "image_certificate_pi", &pi, &w);
    let toric = ctx.timed("image_pi_toric", || image_toric(&pi))?;
    let agree = ideals_equal(&toric, &w)?;
    ctx.check("toric_cross_check", gb_hash(&w), gb_hash(&toric), agree);

    // The eight fixed points and their images.
    let mut images = Vec::new();
    let mut coordinate = true;
    for z in FIXED_POINTS {
        let mut c = vec![1u32; 6];
        for (k, &v) in z.iter().enumerate() {
            c[2 * k + v] = 0;
        }
        let y = eval_map(&pi, &ProjectivePoint::new(field, &c)?)?;
        let nz: Vec<usize> = (0..14).filter(|&k| y.coords()[k] != 0).collect();
        if nz.len() != 1 {
            coordinate = false;
        }
        images.push(nz[0]);
    }
    let names = |v: &[usize]| -> String {
        v.iter().map(|k| format!("w_{k}")).collect::<Vec<_>>().join(",")
    };
    ctx.check(
        "fixed_point_images",
        names(&FIXED_IMAGES),
        names(&images),
        coordinate && images == FIXED_IMAGES,
    );
    // Singular on W: the jacobian of the quadrics drops below codimension 10.
    let jac = jacobian(w_fix.gens());
    let mut ranks = Vec::new();
    for &k in &images {
        let mut pt = vec![0u32; 14];
        pt[k] = 1;
        let mut m = FMatrix::zeros(field, 0, 14);
        for row in &jac {
            let r: Vec<u32> = row.iter().map(|g| g.eval(&pt)).collect();
            m.push_row(&r)?;
        }
        ranks.push(m.rank());
    }
    ctx.check(
        "fixed_points_singular_on_W",
        "jacobian rank < 10 at all eight",
        format!("{ranks:?}"),
        ranks.iter().all(|&r| r < 10),
    );

    // Projection from the span of the eight points.
    let rho = fixtures::map(fixtures::RHO, prime, Some(&w_ring), None)?;
    let t_ring = rho.target().clone();
    let kept: Vec<usize> = (0..14).filter(|k| !images.contains(k)).collect();
    let proj = RationalMap::new(
        &w_ring,
        &t_ring,
        kept.iter().map(|&k| Polynomial::var(&w_ring, k)).collect(),
    )?;
    ctx.check(
        "rho_is_projection_from_span",
        forms_text(&rho),
        forms_text(&proj),
        proj.forms() == rho.forms(),
    );

    let rho_w = rho.restrict(&w)?.with_parametrization(&pi)?;
    let q_fix = fixtures::ideal(fixtures::Q_QUADRICS, prime, Some(&t_ring))?;
    let q_img = ctx.timed("image_rho_W", || image_seeded(&rho_w, strategy, IMAGE_DEGREE_BOUND, seed))?;
    let same = ideals_equal(&q_img, &q_fix)?;
    ctx.coefficient_check("image_rho_W_equals_Q", || {
        Ok((gb_hash(&q_fix), gb_hash(&q_img), same))
    })?;
    ctx.check_eq("dim_degree_Q", "(3, 4)", dim_degree(&q_img)?);
    certificate(ctx, "image_certificate_rho_W", &rho_w, &q_img);
    let deg = ctx.timed("degree_rho_W", || map_degree_seeded(&rho_w, seed))?;
    ctx.check_eq("rho_W_birational", "map degree 1", format!("map degree {deg}"));

    // q : P^3 --> Q and its inverse.
    let q = fixtures::map(fixtures::Q, prime, None, Some(&t_ring))?;
    let s_ring = q.source().clone();
    let q_image = ctx.timed("image_q", || image_seeded(&q, strategy, IMAGE_DEGREE_BOUND, seed))?;
    let same = ideals_equal(&q_image, &q_img)?;
    ctx.check("image_q_equals_Q", gb_hash(&q_img), gb_hash(&q_image), same);
    certificate(ctx, "image_certificate_q", &q, &q_image);
    let deg = map_degree_seeded(&q, seed)?;
    ctx.check_eq("q_birational", "map degree 1", format!("map degree {deg}"));
    let q_inv = ctx.timed("inverse_q", || inverse_map_seeded(&q, Some(&q_img), IMAGE_DEGREE_BOUND, seed))?;
    let q_inv_fix = fixtures::map(fixtures::Q_INVERSE, prime, Some(&t_ring), Some(&s_ring))?.restrict(&q_img)?;
    let same = same_rational_map(&q_inv, &q_inv_fix)?;
    ctx.coefficient_check("q_inverse_matches", || {
        let shown = if same { "same map on Q: " } else { "differs: " };
        Ok((forms_text(&q_inv_fix), format!("{shown}{}", forms_text(&q_inv)), same))
    })?;
    let exact = inverse_identity_holds(&q, &q_inv)?;
    ctx.check("q_inverse_identity", "exact", if exact { "exact" } else { "fails" }, exact);

    // W --> P^3 and the inverse ν.
    let comp = rho.then(&q_inv)?.restrict(&w)?.with_parametrization(&pi)?;
    let comp_fix = fixtures::map(fixtures::W_TO_P3, prime, Some(&w_ring), Some(&s_ring))?.restrict(&w)?;
    let same = same_rational_map(&comp, &comp_fix)?;
    ctx.coefficient_check("composed_map_matches", || {
        Ok((forms_text(&comp_fix), if same { "same map on W" } else { "differs" }.to_string(), same))
    })?;
    let deg = ctx.timed("degree_W_to_P3", || map_degree_seeded(&comp, seed))?;
    ctx.check_eq("composed_map_birational", "map degree 1", format!("map degree {deg}"));
    let p3 = Ideal::zero(&s_ring);
    let nu = ctx.timed("inverse_W_to_P3", || inverse_map_seeded(&comp, Some(&p3), IMAGE_DEGREE_BOUND, seed))?;
    let nu_fix = fixtures::map(fixtures::NU, prime, Some(&s_ring), Some(&w_ring))?;
    ctx.coefficient_check("nu_matches_14_sextics", || {
        Ok(match proportional_forms(nu_fix.forms(), nu.forms()) {
            Some(c) => (
                "proportional".to_string(),
                format!("proportional, scalar {}", field.to_signed(c)),
                true,
            ),
            None => ("proportional".to_string(), forms_text(&nu), false),
        })
    })?;
    let exact = inverse_identity_holds(&comp, &nu)?;
    ctx.check("nu_identity_exact", "exact", if exact { "exact" } else { "fails" }, exact);
    let fixes = inverse_fixes_samples(&comp, &nu, 100, seed)?;
    ctx.check("nu_fixes_100_samples", true, fixes, fixes);
    let nu_img = ctx.timed("image_nu", || image_seeded(&nu, strategy, IMAGE_DEGREE_BOUND, seed))?;
    let same = ideals_equal(&nu_img, &w)?;
    ctx.check("image_nu_equals_W", gb_hash(&w), gb_hash(&nu_img), same);
    certificate(ctx, "image_certificate_nu", &nu, &nu_img);
    Ok(())
}
