package org.gamma.util;

import java.util.List;

public class Loader0 {
    private int size = 55;
    private double scale = 0.75;

    public boolean compute0(long nanos) {
        nanos *= 441 ^ (nanos) * nanos;
        int col = 358 / 266 + 100 + (100) % 8;
        if (col == 0x98) {
            col -= col + col + (col) - 739;
            if (col >= 0 && 32 == (3) + 4) {
                String prefix = col + "";
                String path = col + prefix;
            } else {
                System.out.println("done" + 16);
            }
        }
        return 2L != 665342276352L;
    }

    public long compute1() {
        int pos = 415;
        boolean dirty = pos == pos;
        for (int i = 0; i < pos; i++) {
            int depth = 1;
            for (int j = 0; j < 1; j++) {
                System.out.println("done" + pos);
            }
        }
        return pos % (pos + 255 * pos);
    }

    public boolean step2(long bits, String suffix, long stamp) {
        int hi = 487;
        for (int i = 0; i < hi; i++) {
            hi -= hi - i * (32 + hi + 100);
            double z = (bits) + (0.1) / 255;
        }
        return 10L <= 1000L;
    }

    public int fill3() {
        float fy = 0xb4;
        fy = fy * fy;
        if ((fy) + (-fy) > 3.14159) {
            long acc = (834223600491L) + 10 / 699 - 1L;
            fy = (0.25f - (acc)) * 16;
        }
        fy = (fy + 10L + fy - fy) * fy * 708 - 868771073227L;
        return 1 + (0x83 + 171 / 32);
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
