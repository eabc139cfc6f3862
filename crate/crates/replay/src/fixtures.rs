//! Vendored polynomial data, read at the scenario's prime.

use projgeom::groebner::Ideal;
use projgeom::io::{read_family, read_ideal_list, read_map};
use projgeom::polyring::{ParametricFamily, Ring};
use projgeom::varmap::RationalMap;
use projgeom::Result;

pub const W_QUADRICS: &str = include_str!("../fixtures/w_quadrics.ideal");
pub const Q_QUADRICS: &str = include_str!("../fixtures/q_quadrics.ideal");
pub const LINES_R: &str = include_str!("../fixtures/lines_r.ideal");
pub const PI: &str = include_str!("../fixtures/pi.map");
pub const RHO: &str = include_str!("../fixtures/rho.map");
pub const Q: &str = include_str!("../fixtures/q.map");
pub const Q_INVERSE: &str = include_str!("../fixtures/q_inverse.map");
pub const W_TO_P3: &str = include_str!("../fixtures/w_to_p3.map");
pub const NU: &str = include_str!("../fixtures/nu.map");
pub const SEXTIC_FAMILY: &str = include_str!("../fixtures/sextic_family.family");
pub const TRIPLE_POINT_FAMILY: &str = include_str!("../fixtures/triple_point_family.family");
pub const TANGENT_CONE: &str = include_str!("../fixtures/tangent_cone.family");
pub const CHAIN: &str = include_str!("../fixtures/chain.txt");

/// A map fixture; rings are reused when given so ideals compare directly.
pub fn map(text: &str, prime: u32, source: Option<&Ring>, target: Option<&Ring>) -> Result<RationalMap> {
    let m = read_map(text, Some(prime), source, target)?;
    RationalMap::new(&m.source, &m.target, m.forms)
}

/// A single-ideal fixture, moved into `ring` by variable names.
pub fn ideal(text: &str, prime: u32, ring: Option<&Ring>) -> Result<Ideal> {
    let (r, list) = read_ideal_list(text, Some(prime))?;
    let all: Vec<_> = list.iter().flat_map(|i| i.gens().to_vec()).collect();
    let i = Ideal::new(&r, all);
    match ring {
        Some(target) => i.to_ring_by_names(target),
        None => Ok(i),
    }
}

/// One ideal per line of the fixture.
pub fn ideal_list(text: &str, prime: u32, ring: &Ring) -> Result<Vec<Ideal>> {
    let (_, list) = read_ideal_list(text, Some(prime))?;
    list.iter().map(|i| i.to_ring_by_names(ring)).collect()
}

pub fn family(text: &str, prime: u32, geom: Option<&Ring>) -> Result<ParametricFamily> {
    read_family(text, Some(prime), geom)
}
