package app.model;

interface Visitor {
    void visit(Object node);
}

class BackgroundColor {
    private int red;
    private int green;

    int mix(int other) {
        return red + other;
    }

    int shade(int amount) {
        return green - amount > 0 ? green - amount : 0;
    }
}

class Marker {
    void mark() {
    }
}

class Registry {
    private static int instances;
    private String id;

    void register(String name) {
        id = name;
        instances++;
    }

    String describe(String prefix) {

        return prefix + id;
    }
}
