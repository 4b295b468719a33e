// Temporary graph dumps for figure comparison; deleted before finalizing.
use ccgraph_core::classgraph::{GraphBuilder, Relation};
use ccgraph_core::families::{build, load_fixture, GroupSpec};

fn dump(name: &str, cap: usize) {
    let g = match name {
        "PSL33" => build(&GroupSpec::Psl33, cap).unwrap(),
        _ => load_fixture(name, cap).unwrap(),
    };
    println!("==== {} (order {}) ====", g.name(), g.order());
    for c in g.classes() {
        println!("  class {} order {} size {} rep {}", c.label, c.elem_order, c.size, g.element(c.rep_index()));
    }
    let b = GraphBuilder::new(&g);
    for rel in [Relation::Ccc, Relation::Ncc, Relation::Scc] {
        let t0 = std::time::Instant::now();
        let graph = b.build(rel);
        let labels: Vec<String> = graph
            .edges()
            .iter()
            .map(|&(i, j)| format!("{}-{}", graph.vertices()[i].label, graph.vertices()[j].label))
            .collect();
        println!("{} {:?} [{} edges, {:.1?}]: {}", g.name(), rel, labels.len(), t0.elapsed(), labels.join(" "));
    }
}

#[test]
#[ignore]
fn dump_m11() { dump("M11", 10_000); }

#[test]
#[ignore]
fn dump_psl33() { dump("PSL33", 10_000); }

#[test]
#[ignore]
fn dump_sz8() { dump("Sz8", 30_000); }

#[test]
#[ignore]
fn dump_m12() { dump("M12", 100_000); }
