//! The settle dynamics up close: a hand-wired network with explicit
//! adjacency, iterated to equilibrium and compared against the decoupled
//! case.
//!
//!     cargo run --example energy_network

use featurank::{EnergyParams, Network};

fn main() -> featurank::Result<()> {
    // Three fired nodes on a path: solver - mesh - shock. Activations are
    // what feature matching would have produced.
    let nodes = vec![
        ("solver".to_string(), 2.0),
        ("mesh".to_string(), 3.0),
        ("shock".to_string(), 1.0),
    ];
    let adjacency = vec![
        vec![false, true, false],
        vec![true, false, true],
        vec![false, true, false],
    ];

    for alpha in [0.0, 0.1, 0.3] {
        let params = EnergyParams {
            coupling: alpha,
            ..EnergyParams::default()
        };
        let mut net = Network::with_adjacency(nodes.clone(), adjacency.clone(), params)?;
        net.settle()?;
        println!("alpha = {alpha}:");
        for (word, energy) in net.node_energies() {
            println!("  {word:8} E = {energy:.6}");
        }
        println!("  total score = {:.6}\n", net.score());
    }

    println!("alpha = 0 leaves E = base + activation; coupling feeds energy");
    println!("back through the path, with the middle node gaining the most.");
    Ok(())
}
