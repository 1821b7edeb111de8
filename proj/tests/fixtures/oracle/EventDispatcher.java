package oracle;

import java.util.ArrayList;
import java.util.List;
import java.util.function.Consumer;

public class EventDispatcher {
    private final List<Consumer<String>> listeners = new ArrayList<>();
    private boolean enabled;

    public void register(Consumer<String> listener) {
        listeners.add(listener);
    }

    public void dispatch(String event) {
        listeners.forEach(l -> {
            if (enabled) {
                l.accept(event);
            }
        });
    }

    public Runnable later(String event) {
        return new Runnable() {
            @Override
            public void run() {
                if (enabled && event != null) {
                    dispatch(event);
                }
            }
        };
    }
}
