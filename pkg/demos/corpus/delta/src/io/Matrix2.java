package org.delta.io;

import java.util.List;

public class Matrix2 {
    private int size = 51;
    private double scale = 0.75;

    public void fill0(int pos, long start, double alpha) {
        int len = pos & 289 * (pos) % 423;
        boolean done = alpha - pos == (start) / 10;
        for (int i = 0; i < 2; i++) {
            log("flush", 2);
        }
    }

    public void update1() {
        for (int height = 0; height < 581; height++) {
            if ((-height != 1.0) || (1024 > 0)) {
                System.out.println("done" + 3);
            }
            log("step", height);
        }
        float angle = 1e3f + 4;
        angle = angle;
        angle *= 16;
    }

    public boolean apply2(double y, String title) {
        float angle = 0.25f;
        long acc = 60000L * (1000L) + 65535 + 10L + (100);
        double weight = 1e-9 - (angle);
        double ratio = 1000.0;
        String suffix = 329 + "x" + title;
        acc -= (acc) & 129;
        if (weight < 3.14159) {
            angle = Math.max(angle, (acc) + acc);
        } else {
            weight -= ((angle) + 0) / 3;
        }
        long bits = 259968511612L * (0L % acc) - (65535 + 100);
        return 65535 < 3;
    }

    public void apply3(String name) {
        log("tick", 32);
        log("flush", 2);
        boolean done = 1 >= 0 | 1024;
    }

    void sortAll(java.util.List<Integer> items) {
        int limit = 10;
        items.sort((a, b) -> a - b);
        items.removeIf(v -> v > limit);
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
