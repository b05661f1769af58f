use graph_model::check_model_equivalence;
use plcw_core::surfaces::{bigon_sphere, square_torus, triangle_sphere, triangle_torus};
use plcw_core::{complex_from_words, parse_surface, PlcwComplex, DEFAULT_BUDGET};

fn surface(text: &str) -> PlcwComplex {
    parse_surface(text).unwrap().complex
}

fn run(name: &str, k: &PlcwComplex) {
    assert!(k.faces.len() <= 3);
    for r in 1..=3 {
        let rep = check_model_equivalence(k, r, DEFAULT_BUDGET).unwrap();
        println!("{name} r={r}: {rep:?}");
        assert!(rep.pass, "{name} at r = {r}: {rep:?}");
    }
}

#[test]
fn closed_surfaces() {
    run("square torus", &square_torus());
    run("triangle torus", &triangle_torus());
    run("triangle sphere", &triangle_sphere());
    run("bigon sphere", &bigon_sphere(3));
    let g2 = complex_from_words(&[("f", &["+a", "+b", "-a", "-b", "+x"]), ("g", &["-x", "+c", "+d", "-c", "-d"])]).unwrap();
    run("genus two", &g2);
}

#[test]
fn surfaces_with_boundary() {
    run(
        "disk",
        &surface("edge a u u\nface f +a\nboundary closed out 1 +a\n"),
    );
    run(
        "two-face disk",
        &surface("edge a u u\nedge c u u\nface f +a -c\nface g +c\nboundary closed out 1 +a\n"),
    );
    run(
        "three-face disk",
        &surface("edge a u u\nedge c u w\nedge d w w\nedge e w w\nface f +a +c -d -c\nface g +d -e\nface h +e\nboundary closed out 1 +a\n"),
    );
    run(
        "cylinder",
        &surface("edge a u u\nedge b w w\nedge c u w\nface f -a +c +b -c\nboundary closed in 1 -a\nboundary closed out 1 +b\n"),
    );
    run(
        "split cylinder",
        &surface(
            "edge a u u\nedge b w w\nedge c u w\nedge d u w\nface f -a +c +b -d\nface g +d -c\nboundary closed in 0 -a\nboundary closed out 0 +b\n",
        ),
    );
    run(
        "pants",
        &surface(
            "edge a u u\nedge b v v\nedge c w w\nedge e1 u w\nedge e2 v w\nface f -a +e1 +c -e2 -b +e2 -e1\nboundary closed in 1 -a\nboundary closed in 1 -b\nboundary closed out 1 +c\n",
        ),
    );
    run(
        "open strip",
        &surface("edge i p q\nedge o s t\nedge f1 p s\nedge f2 t q\nface f -i +f1 +o +f2\nboundary open in -i\nboundary open out +o\n"),
    );
    run(
        "punctured torus",
        &surface("edge a u u\nedge b u u\nedge c u w\nface f +a +b -a -b +c -c\npuncture w\n"),
    );
}
