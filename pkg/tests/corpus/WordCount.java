import java.util.HashMap;
import java.util.Map;

public class WordCount {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static String[] split(String text) {
        int n = 0;
        boolean inWord = false;
        for (int i = 0; i < text.length(); i++) {
            boolean letter = Character.isLetter(text.charAt(i));
            if (letter && !inWord) {
                n++;
            }
            inWord = letter;
        }
        String[] out = new String[n];
        int k = 0;
        StringBuilder cur = new StringBuilder();
        for (int i = 0; i <= text.length(); i++) {
            if (i < text.length() && Character.isLetter(text.charAt(i))) {
                cur.append(Character.toLowerCase(text.charAt(i)));
            } else if (cur.length() > 0) {
                out[k] = cur.toString();
                k++;
                cur = new StringBuilder();
            }
        }
        return out;
    }

    public static void main(String[] args) {
        String text = "The quick brown fox jumps over the lazy dog. The dog sleeps; the fox runs!";
        String[] words = split(text);
        Map<String, Integer> counts = new HashMap<>();
        for (String w : words) {
            counts.put(w, counts.getOrDefault(w, 0) + 1);
        }
        String[] probe = {"the", "fox", "dog", "cat", "runs"};
        for (String p : probe) {
            System.out.println(p + "=" + counts.getOrDefault(p, 0));
        }
        check(words.length == 15, "word count");
        check(counts.get("the") == 4, "the");
        check(!counts.containsKey("cat"), "cat");
        check(counts.size() == 10, "distinct");
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
