//! Small closed surfaces and disks used throughout the tests.

use crate::complex::{complex_from_words, PlcwComplex};

fn build(faces: &[(&str, Vec<String>)]) -> PlcwComplex {
    let owned: Vec<(&str, Vec<&str>)> = faces.iter().map(|(n, w)| (*n, w.iter().map(|s| s.as_str()).collect())).collect();
    let refs: Vec<(&str, &[&str])> = owned.iter().map(|(n, w)| (*n, w.as_slice())).collect();
    let k = complex_from_words(&refs).expect("well-formed words");
    k.validate().expect("valid surface");
    k
}

fn word(sides: &[&str]) -> Vec<String> {
    sides.iter().map(|s| s.to_string()).collect()
}

/// One square with sides `a b a^-1 b^-1`.
pub fn square_torus() -> PlcwComplex {
    build(&[("f", word(&["+a", "+b", "-a", "-b"]))])
}

/// The square torus cut along a diagonal.
pub fn triangle_torus() -> PlcwComplex {
    build(&[("f", word(&["+a", "+b", "-c"])), ("g", word(&["+c", "-a", "-b"]))])
}

/// Two triangles glued along their boundary.
pub fn triangle_sphere() -> PlcwComplex {
    build(&[("f", word(&["+a", "+b", "+c"])), ("g", word(&["-c", "-b", "-a"]))])
}

/// `n` bigons between two poles.
pub fn bigon_sphere(n: usize) -> PlcwComplex {
    let faces: Vec<(String, Vec<String>)> =
        (0..n).map(|i| (format!("f{i}"), vec![format!("+e{i}"), format!("-e{}", (i + 1) % n)])).collect();
    let refs: Vec<(&str, Vec<String>)> = faces.iter().map(|(n, w)| (n.as_str(), w.clone())).collect();
    build(&refs)
}

/// The standard `4g`-gon `a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1` for
/// `g >= 1`, and the triangle sphere for `g = 0`.
pub fn closed_surface(g: usize) -> PlcwComplex {
    if g == 0 {
        return triangle_sphere();
    }
    let mut w = Vec::new();
    for i in 1..=g {
        w.extend([format!("+a{i}"), format!("+b{i}"), format!("-a{i}"), format!("-b{i}")]);
    }
    build(&[("f", w)])
}

/// An `n`-gon with free boundary.
pub fn free_disk(n: usize) -> PlcwComplex {
    let mut k = build(&[("f", (0..n).map(|i| format!("+x{i}")).collect())]);
    crate::glue::rebuild_free_boundary(&mut k);
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristics() {
        assert_eq!(square_torus().euler_characteristic(), 0);
        assert_eq!(triangle_torus().euler_characteristic(), 0);
        assert_eq!(triangle_sphere().euler_characteristic(), 2);
        assert_eq!(bigon_sphere(3).euler_characteristic(), 2);
        assert_eq!(closed_surface(2).euler_characteristic(), -2);
        assert_eq!(closed_surface(3).euler_characteristic(), -4);
        assert_eq!(free_disk(3).euler_characteristic(), 1);
    }
}
