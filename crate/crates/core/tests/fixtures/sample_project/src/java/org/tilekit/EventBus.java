package org.tilekit;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;
import java.util.function.Consumer;

public class EventBus {
    private final Map<Class<?>, List<Consumer<Object>>> listeners = new HashMap<>();
    private int deliveredCount;
    private boolean dispatching;

    public <T> void subscribe(Class<T> eventClass, Consumer<Object> listener) {
        listeners.computeIfAbsent(eventClass, key -> new ArrayList<>()).add(listener);
    }

    public void publish(Object event) {
        List<Consumer<Object>> targets = listeners.get(event.getClass());
        if (targets == null) {
            return;
        }
        dispatching = true;
        try {
            for (Consumer<Object> target : targets) {
                target.accept(event);
                deliveredCount++;
            }
        } finally {
            dispatching = false;
        }
    }

    public boolean hasListeners(Class<?> eventClass) {
        List<Consumer<Object>> registered = listeners.get(eventClass);
        return registered != null && !registered.isEmpty();
    }

    public int getDeliveredCount() {
        return deliveredCount;
    }

    public boolean isDispatching() {
        return dispatching;
    }
}
