public class LinkedNodes {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static class Node {
        int value;
        Node next;

        Node(int value, Node next) {
            this.value = value;
            this.next = next;
        }
    }

    static Node build(int n) {
        Node head = null;
        for (int i = n; i >= 1; i--) {
            head = new Node(i, head);
        }
        return head;
    }

    static Node reverse(Node head) {
        Node prev = null;
        Node cur = head;
        while (cur != null) {
            Node next = cur.next;
            cur.next = prev;
            prev = cur;
            cur = next;
        }
        return prev;
    }

    static int length(Node head) {
        int n = 0;
        for (Node p = head; p != null; p = p.next) {
            n++;
        }
        return n;
    }

    static String render(Node head) {
        StringBuilder sb = new StringBuilder("[");
        for (Node p = head; p != null; p = p.next) {
            sb.append(p.value);
            if (p.next != null) {
                sb.append(",");
            }
        }
        return sb.append("]").toString();
    }

    public static void main(String[] args) {
        Node list = build(8);
        System.out.println(render(list));
        check(length(list) == 8, "length");
        Node r = reverse(list);
        System.out.println(render(r));
        check(r.value == 8 && r.next.value == 7, "reversed");
        int sum = 0;
        Node p = r;
        while (p != null) {
            sum += p.value * p.value;
            p = p.next;
        }
        check(sum == 204, "sum of squares");
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
