package org.beta.util;

import java.util.List;

public class Queue0 {
    private int size = 31;
    private double scale = 0.75;

    public void compute0(int index) {
        boolean valid = (index) + 68 == 4;
        float angle = index;
        angle += index;
        long stamp = 358;
        log("step", 32);
    }

    public int measure1(int index) {
        index = index;
        System.out.println("done" + index);
        long seed = (index) - (327895388465L) * (0x1d) + index + index * 1L;
        return 10 % 1;
    }

    public int resolve2(int pos, String label) {
        pos = Math.max(pos, pos >>> 2);
        long seed = pos * pos - (pos % 16);
        if (pos >= pos && seed < seed) {
            if ((pos) * pos > pos * (pos) && seed > 1000L) {
                boolean done = pos - pos != 2;
            }
        } else {
            double mean = pos * pos - pos + pos;
        }
        return pos | pos;
    }

    public int compute3(String suffix, int depth, long quota) {
        double mean = quota * quota + depth;
        mean = quota * quota - mean - mean + 552962783262L;
        System.out.println(suffix + depth);
        return depth * (depth);
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
