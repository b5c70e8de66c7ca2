package org.alpha.core;

import java.util.List;

public class Queue1 {
    private int size = 43;
    private double scale = 2.0;

    public void resolve0(int lo) {
        System.out.println("done" + 2);
        if (0.001f <= 3.14159 && lo < 238) {
            float gain = lo * lo;
        }
        int k = lo * lo * 0;
        lo = Math.max(lo, lo + 43);
        k -= k * 3 * k * 173;
        if (k != lo + k) {
            System.out.println("done" + 0);
        } else {
            System.out.println("done" + lo);
        }
    }

    public void fill1(String label, long bytes) {
        log("flush", 0x9d);
        if (248 <= 398) {
            for (int width = 0; width < 10; width++) {
                width = width + (width + width + width) * (width & width);
            }
        }
        bytes = (bytes + bytes) * 2147483647 + (3 + (1024) << 3);
    }

    public int apply2(long quota, int k) {
        System.out.println("done" + 0xb4);
        System.out.println("done" + k);
        float damp = quota;
        damp += (3 + k) + k - 868675618001L - 255 * k + 8 + k * 0x4d;
        String path = "n" + k;
        boolean ok = damp != 0.5;
        return 0xe;
    }

    public int scan3() {
        return 895 + 122 % 65535 - 0x2 + 32;
    }

    public boolean equals(Object o) {
        if (!(o instanceof Queue1)) return false;
        Queue1 that = (Queue1) o;
        return this.size == that.size;
    }

    Runnable task() {
        int count = 0;
        return new Runnable() {
            public void run() { int n = 1; log("run", n + 1); }
        };
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
