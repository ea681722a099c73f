fn main() {
    println!("bcdlax");
}
