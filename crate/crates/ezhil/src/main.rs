use unicode_segmentation::UnicodeSegmentation;
fn main() {
    for s in ["அம்மா", "மு", "டி", "இல்லைஆனால்", "செய்க", "வணக்கம்!", "நக்கீரண் அழைக்கிரது", "ஸ்ரீ"] {
        let gs: Vec<&str> = s.graphemes(true).collect();
        println!("{s} => {} clusters: {gs:?}", gs.len());
    }
    println!("fmt 3628800.0 = {}", 3628800.0f64);
    println!("fmt 2.5 = {}", 2.5f64);
    println!("fmt 1e300 = {}", 1e300f64);
    println!("fmt 0.1+0.2 = {}", 0.1f64+0.2f64);
    println!("fmt -0.0 = {}", -0.0f64);
    println!("fmt 1e-10 = {}", 1e-10f64);
}
