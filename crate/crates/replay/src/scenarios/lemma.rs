//! A general plane through the tetrahedron meets its edges in the six
//! vertices of a complete quadrilateral; cubics through them with a node at
//! a general point form a single curve.

use projgeom::modfield::PrimeField;
use projgeom::varmap::{plane_system_dimension, random_coords, rng_for, ProjectivePoint};
use projgeom::Result;

use crate::geometry::RESAMPLE_LIMIT;
use crate::report::Ctx;

pub const SEEDS: u64 = 20;

fn cross(f: PrimeField, a: &[u32], b: &[u32]) -> [u32; 3] {
    let m = |x: u32, y: u32| f.mul(x, y);
    [
        f.sub(m(a[1], b[2]), m(a[2], b[1])),
        f.sub(m(a[2], b[0]), m(a[0], b[2])),
        f.sub(m(a[0], b[1]), m(a[1], b[0])),
    ]
}

fn det3(f: PrimeField, a: &[u32], b: &[u32], c: &[u32]) -> u32 {
    let x = cross(f, b, c);
    (0..3).fold(0, |acc, i| f.add(acc, f.mul(a[i], x[i])))
}

/// Quadrilateral vertices `A_ij` (in the order 01, 02, 03, 12, 13, 23) cut
/// on a seeded random plane, together with a general point of the plane.
pub struct Configuration {
    pub vertices: Vec<ProjectivePoint>,
    pub p: ProjectivePoint,
}

pub fn configuration(field: PrimeField, seed: u64) -> Result<Option<Configuration>> {
    let mut rng = rng_for(seed, 30);
    for _ in 0..RESAMPLE_LIMIT {
        // Row i: s_i as a linear form on the plane.
        let rows: Vec<Vec<u32>> = (0..4).map(|_| random_coords(&mut rng, field, 3)).collect();
        let mut verts = Vec::with_capacity(6);
        for i in 0..4 {
            for j in i + 1..4 {
                verts.push(cross(field, &rows[i], &rows[j]));
            }
        }
        let p = random_coords(&mut rng, field, 3);
        // Reject degenerate planes: a zero vertex, or p on one of the four lines.
        let degenerate = verts.iter().any(|v| v.iter().all(|&c| c == 0))
            || rows.iter().any(|r| (0..3).fold(0, |a, k| field.add(a, field.mul(r[k], p[k]))) == 0);
        if degenerate {
            continue;
        }
        let vertices = verts
            .iter()
            .map(|v| ProjectivePoint::new(field, v))
            .collect::<Result<_>>()?;
        return Ok(Some(Configuration {
            vertices,
            p: ProjectivePoint::new(field, &p)?,
        }));
    }
    Ok(None)
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let field = PrimeField::new(ctx.prime as u64)?;
    let base = ctx.seed;

    let mut dims = Vec::new();
    let mut collinear = true;
    for k in 0..SEEDS {
        let seed = base.wrapping_add(k);
        let Some(c) = configuration(field, seed)? else {
            ctx.check(&format!("seed_{k}_configuration"), "general plane", "no general plane found", false);
            continue;
        };
        // Faces: {01,02,03}, {01,12,13}, {02,12,23}, {03,13,23}.
        for face in [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]] {
            let v = |i: usize| c.vertices[face[i]].coords();
            collinear &= det3(field, v(0), v(1), v(2)) == 0;
        }
        let mut conds = vec![(c.p.clone(), 2)];
        conds.extend(c.vertices.iter().map(|v| (v.clone(), 1)));
        dims.push(plane_system_dimension(3, &conds)?);
    }
    ctx.check("quadrilateral_faces_collinear", true, collinear, collinear);
    let all_zero = dims.len() == SEEDS as usize && dims.iter().all(|&d| d == 0);
    let shown: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    ctx.check(
        "nodal_cubic_unique",
        format!("0 for {SEEDS} seeds"),
        shown.join(","),
        all_zero,
    );

    // Controls with general points.
    let mut rng = rng_for(base, 31);
    let general: Vec<ProjectivePoint> = (0..7)
        .map(|_| ProjectivePoint::new(field, &random_coords(&mut rng, field, 3)))
        .collect::<Result<_>>()?;
    let six: Vec<(ProjectivePoint, u32)> = general[..6].iter().map(|x| (x.clone(), 1)).collect();
    ctx.check_eq("control_six_general_points", 3, plane_system_dimension(3, &six)?);
    ctx.check_eq(
        "control_node_at_general_point",
        6,
        plane_system_dimension(3, &[(general[6].clone(), 2)])?,
    );
    Ok(())
}
