// The `.hg` text format and DOT output.

use transversal::algebra::affine_plane;
use transversal::hgfile;
use transversal::iso::hypergraph_isomorphic;

pub fn run_example() -> anyhow::Result<()> {
    let h = affine_plane(3)?;
    let text = hgfile::write(&h, Some("AG(2,3)"));
    print!("{text}");
    let back = hgfile::parse(&text)?;
    assert!(hypergraph_isomorphic(&h, &back));

    let err = hgfile::parse("p hg 3 1\ne 1 5\n").unwrap_err();
    println!("rejected: {err}");

    let dot = hgfile::to_dot(&h);
    println!("DOT output: {} lines", dot.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
