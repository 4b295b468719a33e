fn main() {
    println!("ccgraph");
}
