fn main() {
    // CLI wired up once the solver stack is in place.
}
