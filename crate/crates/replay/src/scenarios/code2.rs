//! Sextics double along the tetrahedron edges and triple at `p`: the
//! cubic surface they map onto, its fibers, base locus and tangent cone.

use projgeom::groebner::{
    hilbert_dim_degree, ideals_equal, intersect, rational_points_zero_dim, saturate_irrelevant,
    tangent_cone_projective, Ideal,
};
use projgeom::modfield::PrimeField;
use projgeom::polyring::{
    apply_ring_map, MonomialOrder, ParametricFamily, Polynomial, Ring, RingDescriptor,
    RingMap,
};
use projgeom::varmap::{
    certify, certify_base_locus, condition_matrix, fiber, image_seeded, impose_point_multiplicity,
    node_type, random_coords, rng_for, sample_source_and_image, singular_locus, ImageStrategy,
    NodeType, ProjectivePoint, RationalMap, IMAGE_DEGREE_BOUND,
};
use projgeom::{Error, Result};

use crate::fixtures;
use crate::geometry::{edges, linear_parametrization, point_p, span_ideal, vertex, RESAMPLE_LIMIT};
use crate::report::{gb_hash, Ctx, Pair};

/// The substitutions killing the triple-point conditions: row `k` gives
/// `l_k` in terms of `(l_10, l_11, l_12, l_13)`.
const SUBSTITUTION: [[i64; 4]; 10] = [
    [0, 0, 0, 1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [1, -1, 1, -1],
    [0, -1, 2, -2],
    [-2, 1, 0, 2],
    [-2, 1, 0, 2],
    [0, -1, 2, -2],
    [1, -1, 1, -1],
];

fn dim_degree(i: &Ideal) -> Result<String> {
    let (d, e) = hilbert_dim_degree(i)?;
    Ok(Pair(d, e).to_string())
}

fn points_text(pts: &[Vec<u32>], field: PrimeField) -> Result<String> {
    let v: Vec<String> = pts
        .iter()
        .map(|c| ProjectivePoint::new(field, c).map(|p| p.to_string()))
        .collect::<Result<_>>()?;
    Ok(v.join(", "))
}

/// The family of sextics triple at `p`, the map it defines and its image.
pub struct CubicSurface {
    pub family: ParametricFamily,
    pub map: RationalMap,
    pub image: Ideal,
}

pub fn cubic_surface(prime: u32, seed: u64, strategy: ImageStrategy) -> Result<CubicSurface> {
    let family = fixtures::family(fixtures::TRIPLE_POINT_FAMILY, prime, None)?;
    let s = family.geom_ring().clone();
    let x = RingDescriptor::indexed(s.field(), "x", 4, MonomialOrder::Grevlex)?;
    let map = RationalMap::new(&s, &x, family.members().to_vec())?;
    let image = image_seeded(&map, strategy, IMAGE_DEGREE_BOUND, seed)?;
    Ok(CubicSurface { family, map, image })
}

/// Restriction of the cubic to a seeded random plane: the plane cubic, and
/// whether its singular locus is empty.
pub fn hyperplane_section(delta: &Ideal, seed: u64) -> Result<(Polynomial, bool)> {
    let ring = delta.ring();
    let field = ring.field();
    let mut rng = rng_for(seed, 21);
    let pts: Vec<Vec<u32>> = (0..3).map(|_| random_coords(&mut rng, field, 4)).collect();
    let refs: Vec<&[u32]> = pts.iter().map(|v| v.as_slice()).collect();
    let l = linear_parametrization(ring, &refs, "u")?;
    let g = apply_ring_map(l.forms(), &delta.gens()[0])?;
    let sing = singular_locus(&Ideal::new(l.source(), vec![g.clone()]), 1)?;
    Ok((g, sing.is_unit()))
}

fn member_from_substitution(sextic: &ParametricFamily, j: usize) -> Polynomial {
    let field = sextic.geom_ring().field();
    let m = sextic.members();
    let mut f = m[10 + j].clone();
    for (k, row) in SUBSTITUTION.iter().enumerate() {
        f = f.add_scaled(&m[k], field.from_i64(row[j]));
    }
    f
}

/// The chart translation at `p`: `s_v ↦ s_v − 1` for `v < 3`, `s_3 ↦ 1`.
fn chart_at_p(s: &Ring) -> RingMap {
    let field = s.field();
    let one = Polynomial::one(s);
    let images = (0..4)
        .map(|v| {
            if v == 3 {
                one.clone()
            } else {
                Polynomial::var(s, v).add_scaled(&one, field.neg(1))
            }
        })
        .collect();
    RingMap::new(images, s)
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let (prime, seed, strategy) = (ctx.prime, ctx.seed, ctx.strategy);
    let sextic = fixtures::family(fixtures::SEXTIC_FAMILY, prime, None)?;
    let s = sextic.geom_ring().clone();
    let field = s.field();
    let p = point_p(field)?;

    // Triple point conditions.
    let cm = condition_matrix(&sextic, &p, 3)?;
    ctx.check_eq("condition_rank", 10, cm.rank());
    let survivors = impose_point_multiplicity(&sextic, &p, 3)?;
    ctx.check_eq("surviving_parameters", "l_10,l_11,l_12,l_13", survivors.params().join(","));
    let fam_fix = fixtures::family(fixtures::TRIPLE_POINT_FAMILY, prime, Some(&s))?;
    ctx.coefficient_check("family_equation", || {
        let same = survivors.members() == fam_fix.members();
        Ok((
            "fixture l_10..l_13 polynomial".into(),
            if same { "identical coefficients".into() } else { survivors.generic_element().to_signed_string() },
            same,
        ))
    })?;
    ctx.coefficient_check("listed_substitution_gives_family", || {
        let same = (0..4).all(|j| member_from_substitution(&sextic, j) == fam_fix.members()[j]);
        Ok(("equal".into(), if same { "equal" } else { "differs" }.into(), same))
    })?;
    let rank = condition_matrix(&fam_fix, &p, 3)?.rank();
    ctx.check_eq("substituted_family_triple_at_p", "rank 0", format!("rank {rank}"));

    // The cubic surface.
    let cs = ctx.timed("image_nu_bullet", || cubic_surface(prime, seed, strategy))?;
    let delta = &cs.image;
    ctx.check_eq("image_dim_degree", "(2, 3)", dim_degree(delta)?);
    let degs: Vec<String> = delta.gens().iter().map(|g| g.degree().unwrap_or(0).to_string()).collect();
    ctx.check_eq("image_generators", "3", degs.join(","));
    let r = certify(&cs.map, delta);
    ctx.check(
        "image_certificate_nu_bullet",
        "every generator vanishes on the source",
        match &r {
            Ok(()) => "certified".to_string(),
            Err(e) => e.to_string(),
        },
        r.is_ok(),
    );
    let other = match strategy {
        ImageStrategy::Elimination => ImageStrategy::Interpolation,
        _ => ImageStrategy::Elimination,
    };
    let cross = ctx.timed("image_nu_bullet_cross", || image_seeded(&cs.map, other, IMAGE_DEGREE_BOUND, seed))?;
    let same = ideals_equal(&cross, delta)? && certify(&cs.map, &cross).is_ok();
    ctx.check(&format!("image_agrees_with_{}", other.token()), gb_hash(delta), gb_hash(&cross), same);

    let sing = ctx.timed("singular_locus", || singular_locus(delta, 2))?;
    ctx.check_eq("singular_locus_dim_degree", "(0, 4)", dim_degree(&sing)?);
    let nodes = rational_points_zero_dim(&sing)?;
    ctx.check_eq("nodes_count", 4, nodes.points.len());
    let mut types = Vec::new();
    for c in &nodes.points {
        types.push(node_type(delta, &ProjectivePoint::new(field, c)?)?);
    }
    let tokens: Vec<&str> = types.iter().map(|t| t.token()).collect();
    ctx.check(
        "node_types",
        "quadric-cone-node x4",
        format!("{} at {}", tokens.join(","), points_text(&nodes.points, field)?),
        types.len() == 4 && types.iter().all(|t| *t == NodeType::QuadricConeNode),
    );
    ctx.non_check(
        "cayley_normal_form",
        "projective equivalence to the symmetric Cayley cubic is not certified over F_p; \
         the cubic with four quadric-cone nodes is the witness",
    );
    let (g, smooth) = hyperplane_section(delta, seed)?;
    ctx.check(
        "hyperplane_section_smooth_cubic",
        "degree 3, empty singular locus",
        format!("degree {}, singular locus {}", g.degree().unwrap_or(0), if smooth { "empty" } else { "nonempty" }),
        g.degree() == Some(3) && smooth,
    );

    // A general fiber.
    let mut rng = rng_for(seed, 20);
    let mut sample = None;
    for _ in 0..RESAMPLE_LIMIT {
        let (x, y) = sample_source_and_image(&cs.map, 1, &mut rng)?.pop().unwrap();
        if x.coords().iter().all(|&c| c != 0) {
            sample = Some((x, y));
            break;
        }
    }
    let (_, y) = sample.ok_or(Error::DegenerateChain {
        rejected: RESAMPLE_LIMIT,
        tried: RESAMPLE_LIMIT,
    })?;
    let gamma = ctx.timed("fiber", || fiber(&cs.map, &y))?;
    ctx.check_eq("fiber_dim_degree", "(1, 3)", dim_degree(&gamma)?);
    let linear: Vec<Polynomial> = gamma.gens().iter().filter(|g| g.degree() == Some(1)).cloned().collect();
    let alpha = Ideal::new(&s, linear.clone());
    ctx.check_eq("fiber_plane_dim_degree", "(2, 1)", dim_degree(&alpha)?);
    let p_ideal = span_ideal(&s, &[p.coords()])?;
    let through = linear.len() == 1 && alpha.gens().iter().all(|g| g.eval(p.coords()) == 0);
    ctx.check("fiber_plane_contains_p", true, through, through);
    let on = gamma.gens().iter().all(|g| g.eval(p.coords()) == 0);
    ctx.check("fiber_contains_p", true, on, on);
    for (name, e) in edges(&s) {
        let meet = gamma.sum(&e)?;
        ctx.check_eq(&format!("fiber_meets_edge_{name}"), "(0, 1)", dim_degree(&meet)?);
    }
    let gsing = singular_locus(&gamma, 1)?;
    let same = ideals_equal(&gsing, &p_ideal)?;
    ctx.check("fiber_singular_locus_is_p", gb_hash(&p_ideal), gb_hash(&gsing), same);
    let nt = node_type(&gamma, &p)?;
    ctx.check_eq("fiber_node_at_p", NodeType::Node.token(), nt.token());

    // Base locus.
    let lines = fixtures::ideal_list(fixtures::LINES_R, prime, &s)?;
    for (i, fixture) in lines.iter().enumerate() {
        let idx = i + 1;
        let (j, k) = match idx {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        };
        let plane = span_ideal(&s, &[p.coords(), vertex(field, 4, j)?.coords(), vertex(field, 4, k)?.coords()])?;
        let edge = Ideal::new(&s, vec![Polynomial::var(&s, j), Polynomial::var(&s, k)]);
        let meet = rational_points_zero_dim(&plane.sum(&edge)?)?;
        let ok = meet.points.len() == 1 && {
            let r = span_ideal(&s, &[p.coords(), &meet.points[0]])?;
            ideals_equal(&r, fixture)?
        };
        ctx.check(&format!("r{idx}_construction"), gb_hash(fixture), if ok { gb_hash(fixture) } else { "differs".into() }, ok);
    }
    let mut cands: Vec<Ideal> = edges(&s).into_iter().map(|(_, e)| e).collect();
    cands.extend(lines.iter().cloned());
    let cert = ctx.timed("base_locus", || certify_base_locus(&cs.map, &cands))?;
    let n_in = cert.contains.iter().filter(|&&b| b).count();
    ctx.check("base_locus_in_edges_and_r", "9 of 9", format!("{n_in} of 9"), n_in == 9);
    ctx.check(
        "base_locus_residual_dim",
        "<= 0",
        cert.residual_dim,
        cert.residual_dim <= 0,
    );
    ctx.non_check(
        "associated_primes_substitution",
        "the primary decomposition is replaced by containment in all nine lines and a residual of dimension <= 0",
    );

    // Faces and the lines <p, v_i> contract to the nodes.
    let node_set: Vec<Vec<u32>> = nodes.points.clone();
    let contract = |ctx: &mut Ctx, name: &str, pts: Vec<Vec<u32>>| -> Result<()> {
        let refs: Vec<&[u32]> = pts.iter().map(|v| v.as_slice()).collect();
        let l = linear_parametrization(&s, &refs, "u")?;
        let m = l.then(&cs.map)?;
        let img = image_seeded(&m, strategy, IMAGE_DEGREE_BOUND, seed)?;
        let pts = rational_points_zero_dim(&img)?;
        let (d, e) = hilbert_dim_degree(&img)?;
        let ok = (d, e) == (0, 1)
            && pts.points.len() == 1
            && node_set.contains(&pts.points[0])
            && certify(&m, &img).is_ok();
        let at = points_text(&pts.points, field)?;
        ctx.check(name, "a node", format!("{} {at}", Pair(d, e)), ok);
        Ok(())
    };
    for i in 0..4 {
        let others: Vec<Vec<u32>> = (0..4)
            .filter(|&j| j != i)
            .map(|j| vertex(field, 4, j).map(|v| v.coords().to_vec()))
            .collect::<Result<_>>()?;
        contract(ctx, &format!("face_s{i}_contracts"), others)?;
    }
    for i in 0..4 {
        let pts = vec![p.coords().to_vec(), vertex(field, 4, i)?.coords().to_vec()];
        contract(ctx, &format!("line_p_v{i}_contracts"), pts)?;
    }

    // Tangent cone at p.
    let tc_fix = fixtures::family(fixtures::TANGENT_CONE, prime, Some(&s))?;
    let mut chart = chart_at_p(&s);
    ctx.coefficient_check("tangent_cone_equation", || {
        let mut same = true;
        for (f, c) in fam_fix.members().iter().zip(tc_fix.members()) {
            let t = chart.apply(f);
            let low = (0..3).all(|d| t.homogeneous_component(d).is_zero());
            same &= low && t.homogeneous_component(3) == *c;
        }
        Ok(("fixture cubic".into(), if same { "identical coefficients" } else { "differs" }.into(), same))
    })?;
    let mut trng = rng_for(seed, 22);
    let vals = random_coords(&mut trng, field, 4);
    let member = fam_fix.specialize(&vals)?;
    let tc = tangent_cone_projective(&Ideal::new(&s, vec![member]), p.coords())?;
    let want = Ideal::new(&s, vec![tc_fix.specialize(&vals)?]);
    let same = ideals_equal(&tc, &want)?;
    ctx.check("tangent_cone_of_random_member", gb_hash(&want), gb_hash(&tc), same);

    let s3 = Polynomial::var(&s, 3);
    let mut base = vec![s3.clone()];
    base.extend(tc_fix.members().iter().cloned());
    let base = saturate_irrelevant(&Ideal::new(&s, base))?;
    let shift: Vec<Polynomial> = (0..4)
        .map(|v| {
            if v == 3 {
                s3.clone()
            } else {
                Polynomial::var(&s, v).add_scaled(&s3, field.neg(1))
            }
        })
        .collect();
    let mut want: Option<Ideal> = None;
    for r in &lines {
        let moved: Vec<Polynomial> = r.gens().iter().map(|g| apply_ring_map(&shift, g)).collect::<Result<_>>()?;
        let pt = Ideal::new(&s, moved).add_gens([s3.clone()]);
        want = Some(match want {
            None => pt,
            Some(w) => intersect(&w, &pt)?,
        });
    }
    let want = want.expect("three lines");
    let same = ideals_equal(&base, &want)?;
    let pts = rational_points_zero_dim(&base)?;
    ctx.check(
        "tangent_cone_base_points",
        gb_hash(&want),
        format!("{} {}", gb_hash(&base), points_text(&pts.points, field)?),
        same && pts.points.len() == 3,
    );
    Ok(())
}
